//! The four set families, their reflections and affine images, and the
//! closed-form rule for the quadratic element of a totally real cubic set.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::Enclosure;
use crate::exact::poly::is_perfect_square;
use crate::exact::{AlgebraicNumber, HalfPlane, MonicIntPoly, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "2r")]
    RealQuadratic,
    #[serde(rename = "2i")]
    ImaginaryQuadratic,
    #[serde(rename = "3ntr")]
    CubicNotTotallyReal,
    #[serde(rename = "3tr")]
    CubicTotallyReal,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::RealQuadratic => "2r",
            Family::ImaginaryQuadratic => "2i",
            Family::CubicNotTotallyReal => "3ntr",
            Family::CubicTotallyReal => "3tr",
        }
    }

    pub fn is_cubic(self) -> bool {
        matches!(self, Family::CubicNotTotallyReal | Family::CubicTotallyReal)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2r" => Ok(Family::RealQuadratic),
            "2i" => Ok(Family::ImaginaryQuadratic),
            "3ntr" => Ok(Family::CubicNotTotallyReal),
            "3tr" => Ok(Family::CubicTotallyReal),
            _ => Err(Error::InvalidParams(format!("unknown family {s:?} (expected 2r, 2i, 3ntr, 3tr)"))),
        }
    }
}

/// A family tag with its parameters: `[n]` for quadratic families, `[m, n]`
/// for cubic ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetSpec {
    pub family: Family,
    pub params: Vec<i64>,
}

impl SetSpec {
    pub fn real_quadratic(n: i64) -> Self {
        SetSpec { family: Family::RealQuadratic, params: vec![n] }
    }

    pub fn imaginary_quadratic(n: i64) -> Self {
        SetSpec { family: Family::ImaginaryQuadratic, params: vec![n] }
    }

    pub fn cubic_ntr(m: i64, n: i64) -> Self {
        SetSpec { family: Family::CubicNotTotallyReal, params: vec![m, n] }
    }

    pub fn cubic_tr(m: i64, n: i64) -> Self {
        SetSpec { family: Family::CubicTotallyReal, params: vec![m, n] }
    }

    /// The parameter `n` (last entry).
    pub fn n(&self) -> i64 {
        *self.params.last().expect("validated spec")
    }

    /// The parameter `m` of cubic families (0 for quadratic ones).
    pub fn m(&self) -> i64 {
        if self.params.len() == 2 {
            self.params[0]
        } else {
            0
        }
    }

    pub fn validate(&self) -> Result<()> {
        let want = if self.family.is_cubic() { 2 } else { 1 };
        if self.params.len() != want {
            return Err(Error::InvalidParams(format!(
                "family {} takes {want} parameter(s), got {}",
                self.family,
                self.params.len()
            )));
        }
        let (m, n) = (self.m() as i128, self.n() as i128);
        let bad = |s: &str| Err(Error::InvalidParams(s.to_string()));
        match self.family {
            Family::RealQuadratic if !(n >= 1 || n <= -3) => bad("2r requires n >= 1 or n <= -3"),
            Family::ImaginaryQuadratic if n < 1 => bad("2i requires n >= 1"),
            Family::CubicNotTotallyReal if m * m - 3 * n > 0 => bad("3ntr requires m^2 - 3n <= 0"),
            Family::CubicNotTotallyReal if m + n < 1 => bad("3ntr requires m + n >= 1"),
            Family::CubicTotallyReal if n > -m - 3 => bad("3tr requires n <= -m - 3"),
            _ => Ok(()),
        }
    }

    /// Inclusive range of the free coefficient (`c` or `d`).
    pub fn coefficient_range(&self) -> (i64, i64) {
        let (m, n) = (self.m(), self.n());
        match self.family {
            Family::RealQuadratic if n >= 1 => (-n, -1),
            Family::RealQuadratic => (1, -n - 2),
            Family::ImaginaryQuadratic if n % 2 != 0 => {
                let h = (n - 1) / 2;
                (h * h + 1, (h + 1) * (h + 1))
            }
            Family::ImaginaryQuadratic => {
                let h = n / 2;
                (h * h + 1, (h + 1) * (h + 1) - 1)
            }
            Family::CubicNotTotallyReal => (-(m + n), -1),
            Family::CubicTotallyReal => (1, -m - n - 2),
        }
    }

    /// The polynomial whose root defines the element with free coefficient `k`.
    pub fn defining_poly(&self, k: i64) -> MonicIntPoly {
        let (m, n) = (self.m(), self.n());
        match self.family {
            Family::RealQuadratic => MonicIntPoly::quadratic(n, k),
            Family::ImaginaryQuadratic if n % 2 != 0 => MonicIntPoly::quadratic(-1, k),
            Family::ImaginaryQuadratic => MonicIntPoly::quadratic(0, k),
            _ => MonicIntPoly::cubic(m, n, k),
        }
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "I[{}]({})", self.family, p.join(","))
    }
}

/// One element with its free coefficient and defining polynomial. For
/// reducible defining cubics the value's minimal polynomial is the quadratic
/// factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetElement {
    #[serde(with = "crate::serde_util::bigint")]
    pub coeff: BigInt,
    pub defining: MonicIntPoly,
    pub value: AlgebraicNumber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetInstance {
    pub spec: SetSpec,
    pub elements: Vec<SetElement>,
}

impl SetInstance {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn values(&self) -> Vec<AlgebraicNumber> {
        self.elements.iter().map(|e| e.value.clone()).collect()
    }
}

pub fn cardinality(spec: &SetSpec) -> Result<i64> {
    spec.validate()?;
    let (lo, hi) = spec.coefficient_range();
    Ok(hi - lo + 1)
}

/// The root in `(0,1)` of a polynomial with a sign change on `[0,1]`,
/// reduced to its irreducible factor.
pub fn unit_root(defining: &MonicIntPoly) -> Result<AlgebraicNumber> {
    let mut minpoly = defining.clone();
    while !minpoly.is_irreducible() {
        let r = minpoly
            .integer_roots()
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidPolynomial(format!("cannot factor {minpoly}")))?;
        minpoly = minpoly.deflate(&r)?;
    }
    AlgebraicNumber::real_in(minpoly, BigRational::zero(), BigRational::one())
}

/// Refinement kept on stored elements so that most comparisons are decided
/// without further work.
const STORED_BITS: u64 = 64;

pub fn build_set(spec: &SetSpec) -> Result<SetInstance> {
    spec.validate()?;
    let (lo, hi) = spec.coefficient_range();
    let mut elements: Vec<SetElement> = (lo..=hi)
        .into_par_iter()
        .map(|k| {
            let defining = spec.defining_poly(k);
            let value = match spec.family {
                Family::ImaginaryQuadratic => AlgebraicNumber::complex(defining.clone(), HalfPlane::Upper)?,
                _ => unit_root(&defining)?.refine(STORED_BITS),
            };
            Ok(SetElement { coeff: BigInt::from(k), defining, value })
        })
        .collect::<Result<_>>()?;
    if spec.family == Family::ImaginaryQuadratic {
        // Im((1+√(1−4c))/2) = √(c − 1/4) and Im(√−c) = √c both grow with c.
        elements.sort_by(|a, b| a.coeff.cmp(&b.coeff));
    } else {
        sort_real(&mut elements);
    }
    Ok(SetInstance { spec: spec.clone(), elements })
}

/// Sorts real elements increasingly by exact comparison.
pub fn sort_real(elements: &mut [SetElement]) {
    elements.sort_by(|a, b| a.value.cmp_real(&b.value).unwrap_or(Ordering::Equal));
}

/// The image of a spec under `α ↦ 1 − α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SetView {
    /// Another member of the same family.
    Family { spec: SetSpec },
    /// `{1 − α | α ∈ I_n^{2,i}}`, which is not itself a family member.
    Tilde { n: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reflection {
    pub view: SetView,
    pub elements: Vec<SetElement>,
    /// `pairing[i] = j` when `1 − (source element i)` is reflected element `j`.
    pub pairing: Vec<usize>,
}

pub fn reflected_view(view: &SetView) -> Result<SetView> {
    match view {
        SetView::Tilde { n } => Ok(SetView::Family { spec: SetSpec::imaginary_quadratic(*n) }),
        SetView::Family { spec } => {
            spec.validate()?;
            let (m, n) = (spec.m(), spec.n());
            Ok(match spec.family {
                Family::RealQuadratic => SetView::Family { spec: SetSpec::real_quadratic(-n - 2) },
                Family::ImaginaryQuadratic => SetView::Tilde { n },
                Family::CubicNotTotallyReal => SetView::Family { spec: SetSpec::cubic_ntr(-m - 3, 2 * m + n + 3) },
                Family::CubicTotallyReal => SetView::Family { spec: SetSpec::cubic_tr(-m - 3, 2 * m + n + 3) },
            })
        }
    }
}

/// Elements of a view, materialized.
pub fn view_elements(view: &SetView) -> Result<Vec<SetElement>> {
    match view {
        SetView::Family { spec } => Ok(build_set(spec)?.elements),
        SetView::Tilde { n } => {
            let src = build_set(&SetSpec::imaginary_quadratic(*n))?;
            Ok(affine_image(&src.elements, true, &BigInt::one()))
        }
    }
}

pub fn reflect_set(spec: &SetSpec) -> Result<Reflection> {
    let src = build_set(spec)?;
    let view = reflected_view(&SetView::Family { spec: spec.clone() })?;
    let elements = view_elements(&view)?;
    let pairing = pair_reflections(&src.elements, &elements)?;
    Ok(Reflection { view, elements, pairing })
}

/// Matches each `1 − a_i` with an element of `target`, exactly.
pub fn pair_reflections(source: &[SetElement], target: &[SetElement]) -> Result<Vec<usize>> {
    source
        .iter()
        .map(|e| {
            let r = e.value.affine(true, &BigInt::one());
            target
                .iter()
                .position(|t| t.value.same_value(&r))
                .ok_or_else(|| Error::InvalidParams(format!("1 − ({}) has no partner", e.value)))
        })
        .collect()
}

/// `ε·S + shift`, transforming both values and defining polynomials.
pub fn affine_image(elements: &[SetElement], negate: bool, shift: &BigInt) -> Vec<SetElement> {
    elements
        .iter()
        .map(|e| {
            let defining = e.defining.affine_substitute(negate, shift);
            let coeff = defining.constant().clone();
            SetElement { coeff, defining, value: e.value.affine(negate, shift) }
        })
        .collect()
}

/// A real value with its minimal polynomial after a half-integer shift
/// `x ↦ x + k/2`. Only defined when the shifted polynomial stays integral.
pub fn half_shift(a: &AlgebraicNumber, k: i64) -> Result<AlgebraicNumber> {
    let shift = BigRational::new(BigInt::from(k), BigInt::from(2));
    let minpoly = a.minpoly().rational_affine_substitute(false, &shift)?;
    let e = a.interval().ok_or(Error::Unsupported("half shift of a non-real number".into()))?;
    let e = e.add_rat(&shift);
    AlgebraicNumber::real_in(minpoly, e.lo, e.hi)
}

/// `(b,c)_± = (−b ± √(b² − 4c)) / 2`.
pub fn bc_pm(b: impl Into<BigInt>, c: impl Into<BigInt>, plus: bool) -> Result<AlgebraicNumber> {
    let p = MonicIntPoly::quadratic(b, c);
    let disc = p.discriminant();
    if is_perfect_square(&disc) {
        return Err(Error::RationalRoot);
    }
    if disc.is_negative() {
        let h = if plus { HalfPlane::Upper } else { HalfPlane::Lower };
        AlgebraicNumber::complex(p, h)
    } else {
        AlgebraicNumber::real_root(p, usize::from(plus))
    }
}

/// `(b, c, ±)` with `x² + bx + c` the minimal polynomial of a quadratic
/// number, `±` as in [`bc_pm`].
pub fn bc_of(a: &AlgebraicNumber) -> Result<(BigInt, BigInt, bool)> {
    if a.degree() != 2 {
        return Err(Error::NotQuadratic);
    }
    let co = a.minpoly().coeffs();
    let plus = match a.root() {
        Root::Complex(h) => *h == HalfPlane::Upper,
        Root::Real(_) => {
            let mid = BigRational::new(-co[0].clone(), BigInt::from(2));
            a.cmp_rational(&mid)? == Ordering::Greater
        }
    };
    Ok((co[0].clone(), co[1].clone(), plus))
}

/// Case of the quadratic-element rule for `I_{b,c}^{3,tr}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ExceptionCase {
    /// `c = −n² + (b−1)n − 1`, `n ≥ δ_b`: all elements cubic.
    LowerBoundary { n: i64 },
    /// `c = −n² + bn`, `n ≥ 1 + ε_b − ε_{−3−b}`: all elements cubic.
    UpperBoundary { n: i64 },
    /// `−n² + (b−1)n − 1 < c < −n² + bn`, `n ≥ 1 + ε_b`: one quadratic element.
    PositiveStrip { n: i64 },
    /// `−n² + bn < c < −n² + (b−1)n − 1`, `n ≤ −3 − ε_{−3−b}`: one quadratic element.
    NegativeStrip { n: i64 },
}

impl ExceptionCase {
    pub fn n(self) -> i64 {
        match self {
            ExceptionCase::LowerBoundary { n }
            | ExceptionCase::UpperBoundary { n }
            | ExceptionCase::PositiveStrip { n }
            | ExceptionCase::NegativeStrip { n } => n,
        }
    }

    pub fn has_exception(self) -> bool {
        matches!(self, ExceptionCase::PositiveStrip { .. } | ExceptionCase::NegativeStrip { .. })
    }
}

/// The constants `δ_b` and `ε_b` for `b ∈ {0, −1, −2, −3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRule {
    pub b: i64,
    pub delta: i64,
    pub eps: i64,
    pub eps_mirror: i64,
}

impl ExceptionRule {
    pub fn new(b: i64) -> Result<Self> {
        if !(-3..=0).contains(&b) {
            return Err(Error::InvalidParams(format!("b must be in {{0,-1,-2,-3}}, got {b}")));
        }
        let eps = |k: i64| i64::from(k == 0);
        Ok(ExceptionRule { b, delta: if b >= -1 { 1 } else { 0 }, eps: eps(b), eps_mirror: eps(-3 - b) })
    }

    pub fn lower(&self, n: i64) -> i64 {
        -n * n + (self.b - 1) * n - 1
    }

    pub fn upper(&self, n: i64) -> i64 {
        -n * n + self.b * n
    }

    /// Every case that applies to `c`; the rule promises exactly one.
    pub fn cases(&self, c: i64) -> Vec<ExceptionCase> {
        let r = (c.unsigned_abs() as i64).sqrt() + self.b.abs() + 8;
        let mut out = Vec::new();
        for n in -r..=r {
            let (lo, up) = (self.lower(n), self.upper(n));
            if c == lo && n >= self.delta {
                out.push(ExceptionCase::LowerBoundary { n });
            }
            if c == up && n >= 1 + self.eps - self.eps_mirror {
                out.push(ExceptionCase::UpperBoundary { n });
            }
            if lo < c && c < up && n > self.eps {
                out.push(ExceptionCase::PositiveStrip { n });
            }
            if up < c && c < lo && n <= -3 - self.eps_mirror {
                out.push(ExceptionCase::NegativeStrip { n });
            }
        }
        out
    }

    pub fn classify(&self, c: i64) -> Result<ExceptionCase> {
        if c > -self.b - 3 {
            return Err(Error::InvalidParams(format!("c must be <= {}, got {c}", -self.b - 3)));
        }
        match self.cases(c).as_slice() {
            [one] => Ok(*one),
            other => Err(Error::InvalidParams(format!(
                "c = {c} matches {} cases for b = {}",
                other.len(),
                self.b
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticException {
    pub n: i64,
    #[serde(with = "crate::serde_util::bigint")]
    pub d: BigInt,
    pub minpoly: MonicIntPoly,
    pub element: AlgebraicNumber,
}

/// The quadratic element of `I_{b,c}^{3,tr}`, if any, from the closed form.
pub fn quadratic_exception(b: i64, c: i64) -> Result<Option<QuadraticException>> {
    let rule = ExceptionRule::new(b)?;
    let case = rule.classify(c)?;
    if !case.has_exception() {
        return Ok(None);
    }
    let n = case.n();
    let (bb, cc, nn) = (BigInt::from(b), BigInt::from(c), BigInt::from(n));
    let k = &cc + &nn * &nn - &bb * &nn;
    let d = -(&nn - &bb) * &k;
    let minpoly = MonicIntPoly::quadratic(nn.clone(), k.clone());
    // (x − (n−b))(x² + nx + k) must be the defining cubic.
    let lin = MonicIntPoly::linear(-(&nn - &bb));
    let product = multiply(&lin, &minpoly);
    if product != MonicIntPoly::cubic(bb, cc, d.clone()) {
        return Err(Error::InvalidParams(format!("factorization identity fails for b={b}, c={c}")));
    }
    let element = AlgebraicNumber::real_in(minpoly.clone(), BigRational::zero(), BigRational::one())?
        .refine(STORED_BITS);
    Ok(Some(QuadraticException { n, d, minpoly, element }))
}

/// Product of two monic polynomials of total degree ≤ 3.
pub fn multiply(a: &MonicIntPoly, b: &MonicIntPoly) -> MonicIntPoly {
    let (x, y) = (a.ascending(), b.ascending());
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, u) in x.iter().enumerate() {
        for (j, v) in y.iter().enumerate() {
            out[i + j] += u * v;
        }
    }
    out.pop();
    MonicIntPoly::new(out.into_iter().rev().collect()).expect("degree ≤ 3")
}

/// Specs of a union family under an explicit bound, in increasing parameter
/// order: `S^{2,r}` (`|n| ≤ bound`), `S^{2,i}` (`n ≤ bound`), `S_m^{3,ntr}`
/// (`n ≤ bound`), `S_m^{3,tr}` (`n ≥ −bound`).
pub fn union_specs(family: Family, m: i64, bound: i64) -> Vec<SetSpec> {
    let specs: Vec<SetSpec> = match family {
        Family::RealQuadratic => (-bound..=bound).map(SetSpec::real_quadratic).collect(),
        Family::ImaginaryQuadratic => (1..=bound).map(SetSpec::imaginary_quadratic).collect(),
        Family::CubicNotTotallyReal => (0..=bound).map(|n| SetSpec::cubic_ntr(m, n)).collect(),
        Family::CubicTotallyReal => (-bound..=bound).map(|n| SetSpec::cubic_tr(m, n)).collect(),
    };
    specs.into_iter().filter(|s| s.validate().is_ok()).collect()
}

/// Lazily materialized union members.
pub fn union_instances(family: Family, m: i64, bound: i64) -> impl Iterator<Item = Result<SetInstance>> {
    union_specs(family, m, bound).into_iter().map(|s| build_set(&s))
}

/// `k√−1`, the extra members of the hatted imaginary union.
pub fn gaussian_member(k: i64) -> Result<AlgebraicNumber> {
    if k < 1 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    bc_pm(0, k * k, true)
}

/// Enclosure of the real value of a stored real element.
pub fn value_enclosure(e: &SetElement, bits: u64) -> Result<Enclosure> {
    e.value.enclosure(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decimals(s: &SetInstance) -> Vec<String> {
        s.elements.iter().map(|e| e.value.to_decimal(5).unwrap()).collect()
    }

    #[test]
    fn small_instances() {
        let s = build_set(&SetSpec::real_quadratic(1)).unwrap();
        assert_eq!(decimals(&s), ["0.61803"]);
        assert_eq!(s.elements[0].value.minpoly(), &MonicIntPoly::from_i64s(&[1, -1]).unwrap());

        let s = build_set(&SetSpec::imaginary_quadratic(2)).unwrap();
        let polys: Vec<_> = s.elements.iter().map(|e| e.value.minpoly().clone()).collect();
        assert_eq!(polys, [MonicIntPoly::from_i64s(&[0, 2]).unwrap(), MonicIntPoly::from_i64s(&[0, 3]).unwrap()]);

        let s = build_set(&SetSpec::cubic_tr(0, -5)).unwrap();
        assert_eq!(s.len(), 3);
        let q: Vec<_> = s.elements.iter().filter(|e| e.value.degree() == 2).collect();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0].coeff, BigInt::from(2));
        assert_eq!(q[0].value.minpoly(), &MonicIntPoly::from_i64s(&[2, -1]).unwrap());
    }

    #[test]
    fn invalid_specs() {
        assert!(build_set(&SetSpec::real_quadratic(-2)).is_err());
        assert!(build_set(&SetSpec::imaginary_quadratic(0)).is_err());
        assert!(build_set(&SetSpec::cubic_ntr(3, 2)).is_err());
        assert!(build_set(&SetSpec::cubic_tr(0, -2)).is_err());
    }

    #[test]
    fn cardinalities() {
        assert_eq!(cardinality(&SetSpec::real_quadratic(-3)).unwrap(), 1);
        assert_eq!(cardinality(&SetSpec::imaginary_quadratic(5)).unwrap(), 5);
        assert_eq!(cardinality(&SetSpec::cubic_ntr(1, 2)).unwrap(), 3);
    }

    #[test]
    fn reflections() {
        let r = reflect_set(&SetSpec::real_quadratic(1)).unwrap();
        assert_eq!(r.view, SetView::Family { spec: SetSpec::real_quadratic(-3) });
        assert_eq!(r.elements[0].value.to_decimal(5).unwrap(), "0.38197");

        let r = reflect_set(&SetSpec::cubic_ntr(0, 6)).unwrap();
        assert_eq!(r.view, SetView::Family { spec: SetSpec::cubic_ntr(-3, 9) });

        let r = reflect_set(&SetSpec::imaginary_quadratic(1)).unwrap();
        assert_eq!(r.view, SetView::Tilde { n: 1 });
        let (b, c, plus) = bc_of(&r.elements[0].value).unwrap();
        assert_eq!((b, c, plus), (BigInt::from(-1), BigInt::from(1), false));
    }

    #[test]
    fn bc_notation() {
        let a = bc_pm(0, 3, true).unwrap();
        assert_eq!(a.minpoly(), &MonicIntPoly::from_i64s(&[0, 3]).unwrap());
        let shifted = a.affine(false, &BigInt::one());
        assert!(shifted.same_value(&bc_pm(-2, 4, true).unwrap()));
        assert_eq!(bc_pm(-3, 2, true), Err(Error::RationalRoot));
    }

    #[test]
    fn exception_examples() {
        let e = quadratic_exception(0, -6).unwrap().unwrap();
        assert_eq!((e.n, e.d.clone()), (2, BigInt::from(4)));
        assert_eq!(e.minpoly, MonicIntPoly::from_i64s(&[2, -2]).unwrap());
        assert_eq!(e.element.to_decimal(5).unwrap(), "0.73205");
        assert_eq!(quadratic_exception(0, -7).unwrap(), None);
        let e = quadratic_exception(0, -8).unwrap().unwrap();
        assert_eq!((e.n, e.d.clone()), (-3, BigInt::from(3)));
        assert_eq!(e.minpoly, MonicIntPoly::from_i64s(&[-3, 1]).unwrap());
        assert_eq!(e.element.to_decimal(5).unwrap(), "0.38197");
    }

    #[test]
    fn half_shift_example() {
        let s = build_set(&SetSpec::real_quadratic(2)).unwrap();
        let shifted: Vec<_> = s.elements.iter().map(|e| half_shift(&e.value, 2).unwrap()).collect();
        assert_eq!(shifted[0].minpoly(), &MonicIntPoly::from_i64s(&[0, -2]).unwrap());
        assert_eq!(shifted[1].minpoly(), &MonicIntPoly::from_i64s(&[0, -3]).unwrap());
        assert!(half_shift(&build_set(&SetSpec::real_quadratic(1)).unwrap().elements[0].value, 1).is_err());
    }
}
