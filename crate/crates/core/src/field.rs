//! Field equality for quadratic and cubic algebraic integers.
//!
//! Quadratic fields are compared through square-free kernels and certified
//! by an exact formula. For cubics, candidate coefficients of β in the basis
//! `1, α, α²` are found numerically from the conjugate embeddings, rounded
//! to rationals, and only accepted after an exact check that `g(h(x)) ≡ 0
//! (mod f)` and that `h(α)` lies in β's isolating interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::fixed::{cubic_conjugates, Fx, Prec};
use crate::exact::interval::{int_rat, Enclosure};
use crate::exact::poly::is_perfect_square;
use crate::exact::{AlgebraicNumber, HalfPlane, MonicIntPoly, Root};
use crate::families::{Family, SetInstance, SetSpec};

/// Square-free part of `d`, keeping its sign.
pub fn squarefree_kernel(d: &BigInt) -> Result<BigInt> {
    if d.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rest = d.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut odd = false;
        while (&rest % &p).is_zero() {
            rest /= &p;
            odd = !odd;
        }
        if odd {
            out *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    out *= rest;
    Ok(if d.is_negative() { -out } else { out })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "degree")]
pub enum FieldId {
    #[serde(rename = "1")]
    Rational,
    /// `Q(√d)` with `d` square-free.
    #[serde(rename = "2")]
    Quadratic {
        #[serde(with = "crate::serde_util::bigint")]
        d: BigInt,
    },
    /// Identified by a representative; equality needs [`same_field`].
    #[serde(rename = "3")]
    Cubic { representative: MonicIntPoly },
}

pub fn field_id(a: &AlgebraicNumber) -> Result<FieldId> {
    match a.degree() {
        1 => Ok(FieldId::Rational),
        2 => Ok(FieldId::Quadratic { d: squarefree_kernel(&a.minpoly().discriminant())? }),
        _ => Ok(FieldId::Cubic { representative: a.minpoly().clone() }),
    }
}

/// `a₀ + a₁·base + a₂·base²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldExpression {
    pub base: AlgebraicNumber,
    #[serde(with = "crate::serde_util::rational_vec")]
    pub coeffs: Vec<BigRational>,
}

impl FieldExpression {
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }
}

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over Q in ascending order.

type RPoly = Vec<BigRational>;

fn rmul(a: &[BigRational], b: &[BigRational]) -> RPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Remainder modulo a monic integer polynomial.
fn rrem(mut p: RPoly, f: &MonicIntPoly) -> RPoly {
    let n = f.degree();
    let fa: Vec<BigRational> = f.ascending().into_iter().map(BigRational::from_integer).collect();
    while p.len() > n {
        let lead = p.pop().expect("nonempty");
        let k = p.len() - n;
        for i in 0..n {
            p[k + i] -= &lead * &fa[i];
        }
    }
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// `g(h(x)) mod f`.
fn compose_mod(g: &MonicIntPoly, h: &[BigRational], f: &MonicIntPoly) -> RPoly {
    let h = rrem(h.to_vec(), f);
    let mut acc: RPoly = vec![BigRational::one()];
    for c in g.coeffs() {
        acc = rrem(rmul(&acc, &h), f);
        if acc.is_empty() {
            acc = vec![BigRational::zero()];
        }
        acc[0] += BigRational::from_integer(c.clone());
    }
    rrem(acc, f)
}

/// Interval evaluation of `Σ h_i x^i` on an enclosure of `x`.
fn eval_enclosure(h: &[BigRational], x: &Enclosure) -> Enclosure {
    let mut acc = Enclosure::point(BigRational::zero());
    for c in h.iter().rev() {
        acc = acc.mul(x).add_rat(c);
    }
    acc
}

/// Exact check that `β = h(α)` for `h = Σ coeffs[i] x^i`.
pub fn verify_expression(beta: &AlgebraicNumber, alpha: &AlgebraicNumber, coeffs: &[BigRational]) -> Result<bool> {
    if !compose_mod(beta.minpoly(), coeffs, alpha.minpoly()).is_empty() {
        return Ok(false);
    }
    // h(α) is some root of g; decide which one.
    let h = rrem(coeffs.to_vec(), alpha.minpoly());
    match (alpha.root(), beta.root()) {
        (Root::Real(_), Root::Complex(_)) => Ok(false),
        (Root::Real(_), Root::Real(be)) => {
            if be.lo == be.hi {
                return Ok(true);
            }
            let mut bits = 32;
            loop {
                let v = eval_enclosure(&h, &alpha.enclosure(bits)?);
                if be.lo < v.lo && v.hi < be.hi {
                    return Ok(true);
                }
                if v.hi < be.lo || be.hi < v.lo {
                    return Ok(false);
                }
                if bits > 1 << 16 {
                    return Err(Error::PrecisionExhausted(bits as u32));
                }
                bits *= 2;
            }
        }
        (Root::Complex(ha), _) if alpha.degree() == 2 => {
            // h has degree ≤ 1 after reduction: Im h(α) = h₁·Im α.
            let h1 = h.get(1).cloned().unwrap_or_else(BigRational::zero);
            match beta.root() {
                Root::Complex(hb) if !h1.is_zero() => {
                    let image = if h1.is_positive() { *ha } else { ha.flip() };
                    Ok(image == *hb)
                }
                _ => Ok(false),
            }
        }
        (Root::Complex(_), _) => Err(Error::Unsupported("non-real cubic base".into())),
    }
}

// ---------------------------------------------------------------------------
// Quadratic case.

/// The sign `s` in `a = (−b + s·√(b² − 4c)) / 2`.
fn quadratic_sign(a: &AlgebraicNumber) -> Result<i32> {
    Ok(match a.root() {
        Root::Complex(HalfPlane::Upper) => 1,
        Root::Complex(HalfPlane::Lower) => -1,
        Root::Real(_) => {
            let mid = BigRational::new(-a.minpoly().coeffs()[0].clone(), BigInt::from(2));
            if a.cmp_rational(&mid)? == std::cmp::Ordering::Greater {
                1
            } else {
                -1
            }
        }
    })
}

fn express_quadratic(beta: &AlgebraicNumber, alpha: &AlgebraicNumber) -> Result<Option<FieldExpression>> {
    let (f, g) = (alpha.minpoly().coeffs(), beta.minpoly().coeffs());
    let (d1, d2) = (alpha.minpoly().discriminant(), beta.minpoly().discriminant());
    // √d2 = k·√d1 with k = √(d1·d2)/|d1| rational.
    let prod = &d1 * &d2;
    if !is_perfect_square(&prod) {
        return Ok(None);
    }
    let k = BigRational::new(prod.sqrt(), d1.abs());
    let sigma = quadratic_sign(alpha)? * quadratic_sign(beta)?;
    let a1 = if sigma > 0 { k } else { -k };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    // β = (−b₂ + s_β·k·s_α(2α + b₁)) / 2
    let a0 = (&a1 * int_rat(f[0].clone()) - int_rat(g[0].clone())) * &half;
    let coeffs = vec![a0, a1, BigRational::zero()];
    if verify_expression(beta, alpha, &coeffs)? {
        Ok(Some(FieldExpression { base: alpha.clone(), coeffs }))
    } else {
        Ok(None)
    }
}

// ---------------------------------------------------------------------------
// Cubic case.

/// Largest working precision before giving up.
pub const MAX_PRECISION: u64 = 4096;

/// Starting precision for a base polynomial with discriminant `d`.
pub fn initial_precision(f: &MonicIntPoly) -> u64 {
    (4 * f.discriminant().abs().bits() + 64).max(128)
}

fn guard_bits(f: &MonicIntPoly, g: &MonicIntPoly) -> u64 {
    64 + 4 * (f.root_bound_int().bits() + g.root_bound_int().bits())
}

/// Conjugates of a real cubic and the interpolation weights turning values
/// at the conjugates into coefficients of `1, x, x²`.
#[derive(Clone, Debug)]
pub struct CubicEmbedding {
    pub prec: Prec,
    pub conj: [Fx; 3],
    /// `weights[k] = [w0, w1, w2]`: `a_t = Σ_k y_k · weights[k][t]`.
    weights: [[Fx; 3]; 3],
}

impl CubicEmbedding {
    pub fn new(a: &AlgebraicNumber, prec: Prec) -> Result<Self> {
        let conj = cubic_conjugates(a, prec)?;
        let mut weights: [[Fx; 3]; 3] = Default::default();
        for k in 0..3 {
            let (i, j) = ((k + 1) % 3, (k + 2) % 3);
            let den = (&conj[k] - &conj[i]).mul(&(&conj[k] - &conj[j]), prec);
            let inv = Fx::real(BigInt::one() << prec.0).div(&den, prec)?;
            let s = &conj[i] + &conj[j];
            let p = conj[i].mul(&conj[j], prec);
            weights[k] = [p.mul(&inv, prec), (-&s).mul(&inv, prec), inv];
        }
        Ok(CubicEmbedding { prec, conj, weights })
    }
}

/// Best rational approximation of `x` with denominator ≤ `max_den`, if it
/// lies within `tol`.
pub fn reconstruct(x: &BigRational, max_den: &BigInt, tol: &BigRational) -> Option<BigRational> {
    let (mut h1, mut h2) = (BigInt::one(), BigInt::zero());
    let (mut k1, mut k2) = (BigInt::zero(), BigInt::one());
    let mut r = x.clone();
    let mut best: Option<BigRational> = None;
    for _ in 0..10_000 {
        let a = r.numer().div_floor(r.denom());
        let h = &a * &h1 + &h2;
        let k = &a * &k1 + &k2;
        if &k > max_den {
            break;
        }
        best = Some(BigRational::new(h.clone(), k.clone()));
        let frac = &r - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        r = frac.recip();
        (h2, h1, k2, k1) = (h1, h, k1, k);
    }
    best.filter(|b| (x - b).abs() < *tol)
}

/// Result of one numerical probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Probe {
    Found(Vec<BigRational>),
    Absent,
    /// Rational-looking candidates failed exact verification; retry with
    /// more precision.
    Ambiguous,
}

/// Tries both matchings of the remaining conjugates, with `α ↦ β` fixed.
pub fn probe(
    beta: &AlgebraicNumber,
    alpha: &AlgebraicNumber,
    eb: &CubicEmbedding,
    ea: &CubicEmbedding,
    w: u64,
) -> Result<Probe> {
    let p = ea.prec;
    let max_den = alpha.minpoly().discriminant().abs();
    let tol_fx = BigInt::one() << (p.0 - w / 2);
    let tol = BigRational::new(BigInt::one(), BigInt::one() << (w / 2));
    let den = BigInt::one() << p.0;
    let mut ambiguous = false;
    for perm in [[0usize, 1, 2], [0, 2, 1]] {
        let mut coeffs = Vec::with_capacity(3);
        // Highest coefficient first: it carries the largest weights, and a
        // failure there rejects the matching cheapest.
        for t in (0..3).rev() {
            let mut acc = Fx::default();
            for k in 0..3 {
                acc = &acc + &eb.conj[perm[k]].mul(&ea.weights[k][t], p);
            }
            if acc.im.abs() >= tol_fx {
                break;
            }
            match reconstruct(&BigRational::new(acc.re, den.clone()), &max_den, &tol) {
                Some(q) => coeffs.push(q),
                None => break,
            }
        }
        if coeffs.len() < 3 {
            continue;
        }
        coeffs.reverse();
        if verify_expression(beta, alpha, &coeffs)? {
            return Ok(Probe::Found(coeffs));
        }
        ambiguous = true;
    }
    Ok(if ambiguous { Probe::Ambiguous } else { Probe::Absent })
}

fn express_cubic(beta: &AlgebraicNumber, alpha: &AlgebraicNumber) -> Result<Option<FieldExpression>> {
    if !alpha.is_real() || !beta.is_real() {
        return Err(Error::Unsupported("cubic field test needs real representatives".into()));
    }
    let guard = guard_bits(alpha.minpoly(), beta.minpoly());
    let mut w = initial_precision(alpha.minpoly());
    while w <= MAX_PRECISION {
        let prec = Prec(w + guard);
        let ea = CubicEmbedding::new(alpha, prec)?;
        let eb = CubicEmbedding::new(beta, prec)?;
        match probe(beta, alpha, &eb, &ea, w)? {
            Probe::Found(coeffs) => return Ok(Some(FieldExpression { base: alpha.clone(), coeffs })),
            Probe::Absent => return Ok(None),
            Probe::Ambiguous => w *= 2,
        }
    }
    Err(Error::PrecisionExhausted(w as u32))
}

/// `β` as a polynomial in `α` with rational coefficients, if `β ∈ Q(α)`.
pub fn express_in(beta: &AlgebraicNumber, alpha: &AlgebraicNumber) -> Result<Option<FieldExpression>> {
    if beta.degree() == 1 {
        let r = -int_rat(beta.minpoly().constant().clone());
        return Ok(Some(FieldExpression { base: alpha.clone(), coeffs: vec![r, BigRational::zero(), BigRational::zero()] }));
    }
    if beta.degree() != alpha.degree() {
        return Ok(None);
    }
    if beta.same_value(alpha) {
        return Ok(Some(FieldExpression {
            base: alpha.clone(),
            coeffs: vec![BigRational::zero(), BigRational::one(), BigRational::zero()],
        }));
    }
    match alpha.degree() {
        2 => express_quadratic(beta, alpha),
        _ => express_cubic(beta, alpha),
    }
}

pub fn same_field(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    match a.degree() {
        1 => Ok(true),
        2 => Ok(field_id(a)? == field_id(b)?),
        _ => Ok(express_in(b, a)?.is_some()),
    }
}

/// Trace and norm of `e` as the trace and determinant of multiplication by
/// `e` on `Q[x]/(f)` in the power basis.
pub fn trace_and_norm(e: &FieldExpression) -> Result<(BigRational, BigRational)> {
    let f = e.base.minpoly();
    let n = f.degree();
    let h = rrem(e.coeffs.clone(), f);
    // Column j is h·x^j mod f.
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for j in 0..n {
        let mut xj = vec![BigRational::zero(); j + 1];
        xj[j] = BigRational::one();
        let col = rrem(rmul(&h, &xj), f);
        for (i, c) in col.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &m[i][i]);
    let det = match n {
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
        }
        _ => return Err(Error::Unsupported("degree above three".into())),
    };
    Ok((trace, det))
}

// ---------------------------------------------------------------------------
// Pairwise reports.

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementField {
    pub index: usize,
    #[serde(with = "crate::serde_util::bigint")]
    pub coeff: BigInt,
    pub minpoly: MonicIntPoly,
    pub field: FieldId,
    /// Square-free kernel of the discriminant; an annotation only for cubics.
    #[serde(with = "crate::serde_util::bigint")]
    pub disc_kernel: BigInt,
}

/// Element `j` lies in the field generated by element `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub i: usize,
    pub j: usize,
    pub certificate: FieldExpression,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub spec: SetSpec,
    /// Whether the parameters lie where independence is claimed to hold.
    pub in_claimed_range: bool,
    pub elements: Vec<ElementField>,
    /// Indices of elements of degree < the family degree.
    pub lower_degree: Vec<usize>,
    pub pairs_checked: usize,
    /// Largest reconstruction denominator bound `|disc(f)|` used.
    #[serde(with = "crate::serde_util::bigint")]
    pub denominator_bound: BigInt,
    pub working_bits: u64,
    pub collisions: Vec<Collision>,
}

impl IndependenceReport {
    pub fn independent(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Parameters for which the family is claimed to be independent.
pub fn in_claimed_range(spec: &SetSpec) -> bool {
    match spec.family {
        Family::RealQuadratic => !(-2..=0).contains(&spec.n()),
        Family::ImaginaryQuadratic => spec.n() >= 1,
        Family::CubicNotTotallyReal | Family::CubicTotallyReal => (-3..=0).contains(&spec.m()),
    }
}

pub fn independence_report(s: &SetInstance) -> Result<IndependenceReport> {
    let values = s.values();
    let elements: Vec<ElementField> = s
        .elements
        .iter()
        .enumerate()
        .map(|(index, e)| {
            Ok(ElementField {
                index,
                coeff: e.coeff.clone(),
                minpoly: e.value.minpoly().clone(),
                field: field_id(&e.value)?,
                disc_kernel: squarefree_kernel(&e.value.minpoly().discriminant())?,
            })
        })
        .collect::<Result<_>>()?;
    let top = values.iter().map(|v| v.degree()).max().unwrap_or(0);
    let lower_degree: Vec<usize> = (0..values.len()).filter(|&i| values[i].degree() < top).collect();

    let mut pairs = 0usize;
    let mut collisions = Vec::new();

    // Quadratics: equal kernels are exactly the candidates.
    let quad: Vec<usize> = (0..values.len()).filter(|&i| values[i].degree() == 2).collect();
    for (x, &i) in quad.iter().enumerate() {
        for &j in &quad[x + 1..] {
            pairs += 1;
            if elements[i].field == elements[j].field {
                let cert = express_in(&values[j], &values[i])?
                    .ok_or_else(|| Error::InvalidParams("quadratic certificate failed".into()))?;
                collisions.push(Collision { i, j, certificate: cert });
            }
        }
    }

    // Cubics: numerical probe for every pair, exact check on candidates.
    let cub: Vec<usize> = (0..values.len()).filter(|&i| values[i].degree() == 3).collect();
    let mut denominator_bound = BigInt::zero();
    let mut working_bits = 0;
    if cub.len() >= 2 {
        let w = cub.iter().map(|&i| initial_precision(values[i].minpoly())).max().unwrap_or(128);
        let guard = cub
            .iter()
            .map(|&i| guard_bits(values[i].minpoly(), values[i].minpoly()))
            .max()
            .unwrap_or(64);
        let prec = Prec(w + guard);
        working_bits = w;
        denominator_bound = cub.iter().map(|&i| values[i].minpoly().discriminant().abs()).max().unwrap_or_default();
        let emb: Vec<CubicEmbedding> = cub
            .par_iter()
            .map(|&i| CubicEmbedding::new(&values[i], prec))
            .collect::<Result<_>>()?;
        let idx_pairs: Vec<(usize, usize)> =
            (0..cub.len()).flat_map(|x| (x + 1..cub.len()).map(move |y| (x, y))).collect();
        pairs += idx_pairs.len();
        let found: Vec<Collision> = idx_pairs
            .par_iter()
            .map(|&(x, y)| {
                let (i, j) = (cub[x], cub[y]);
                let coeffs = match probe(&values[j], &values[i], &emb[y], &emb[x], w)? {
                    Probe::Found(c) => Some(c),
                    Probe::Absent => None,
                    Probe::Ambiguous => express_in(&values[j], &values[i])?.map(|e| e.coeffs),
                };
                Ok(coeffs.map(|coeffs| Collision {
                    i,
                    j,
                    certificate: FieldExpression { base: values[i].clone(), coeffs },
                }))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        collisions.extend(found);
    }
    collisions.sort_by_key(|c| (c.i, c.j));
    Ok(IndependenceReport {
        spec: s.spec.clone(),
        in_claimed_range: in_claimed_range(&s.spec),
        elements,
        lower_degree,
        pairs_checked: pairs,
        denominator_bound,
        working_bits,
        collisions,
    })
}

/// Every integral element of `Q(∛2)` has trace divisible by 3, so no
/// element with trace ≢ 0 (mod 3) generates that field. Returns the
/// elements of `s` whose trace is not a multiple of three, with the trace.
pub fn trace_obstruction(s: &SetInstance) -> Vec<(usize, BigInt)> {
    s.elements
        .iter()
        .enumerate()
        .filter_map(|(i, e)| {
            let t = e.value.trace();
            (!(&t % BigInt::from(3)).is_zero()).then_some((i, t))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::interval::rat;
    use crate::families::build_set;

    fn cubic_root(co: &[i64], idx: usize) -> AlgebraicNumber {
        AlgebraicNumber::real_root(MonicIntPoly::from_i64s(co).unwrap(), idx).unwrap()
    }

    #[test]
    fn kernels() {
        assert_eq!(squarefree_kernel(&BigInt::from(8)).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_kernel(&BigInt::from(-12)).unwrap(), BigInt::from(-3));
        assert_eq!(squarefree_kernel(&BigInt::from(5)).unwrap(), BigInt::from(5));
        assert_eq!(squarefree_kernel(&BigInt::from(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn cube_root_pair() {
        let alpha = cubic_root(&[3, 3, -1], 0);
        let beta = cubic_root(&[3, 3, -3], 0);
        let e = express_in(&beta, &alpha).unwrap().unwrap();
        assert_eq!(e.coeffs, vec![rat(0, 1), rat(2, 1), rat(1, 1)]);
        let id = express_in(&alpha, &alpha).unwrap().unwrap();
        assert_eq!(id.coeffs, vec![rat(0, 1), rat(1, 1), rat(0, 1)]);
        assert_eq!(express_in(&cubic_root(&[0, -1, -1], 0), &cubic_root(&[0, 1, -1], 0)).unwrap(), None);
    }

    #[test]
    fn quadratic_same_field() {
        let a = crate::families::bc_pm(2, -1, true).unwrap();
        let b = crate::families::bc_pm(4, -4, true).unwrap();
        assert!(same_field(&a, &b).unwrap());
        let e = express_in(&b, &a).unwrap().unwrap();
        assert!(verify_expression(&b, &a, &e.coeffs).unwrap());
        let c = crate::families::bc_pm(2, -2, true).unwrap();
        assert!(!same_field(&a, &c).unwrap());
    }

    #[test]
    fn traces_and_norms() {
        let a = cubic_root(&[0, -3, 1], 1);
        let sq = FieldExpression { base: a.clone(), coeffs: vec![rat(0, 1), rat(0, 1), rat(1, 1)] };
        assert_eq!(trace_and_norm(&sq).unwrap(), (rat(6, 1), rat(1, 1)));
        let id = FieldExpression { base: a, coeffs: vec![rat(0, 1), rat(1, 1)] };
        assert_eq!(trace_and_norm(&id).unwrap(), (rat(0, 1), rat(-1, 1)));
    }

    #[test]
    fn counterexample_report() {
        let s = build_set(&SetSpec::cubic_ntr(3, 3)).unwrap();
        let r = independence_report(&s).unwrap();
        assert_eq!(r.collisions.len(), 1);
        let c = &r.collisions[0];
        assert_eq!(c.certificate.coeffs, vec![rat(0, 1), rat(2, 1), rat(1, 1)]);
        assert!(!r.in_claimed_range);
    }

    #[test]
    fn quadratic_set_report() {
        let s = build_set(&SetSpec::real_quadratic(4)).unwrap();
        let r = independence_report(&s).unwrap();
        assert!(r.independent());
        let s = build_set(&SetSpec::cubic_tr(0, -6)).unwrap();
        let r = independence_report(&s).unwrap();
        assert!(r.independent());
        assert_eq!(r.lower_degree.len(), 1);
        assert_eq!(s.elements[r.lower_degree[0]].coeff, BigInt::from(4));
    }
}
