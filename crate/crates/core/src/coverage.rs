//! Tilings of the quadratic integers by translates of the unions, common
//! indices for finite sets of quadratic fields, and bounded searches for
//! generators of cubic fields.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{int_rat, rat};
use crate::exact::poly::is_perfect_square;
use crate::exact::{AlgebraicNumber, HalfPlane, MonicIntPoly, Root};
use crate::families::{bc_of, bc_pm, build_set, quadratic_exception, unit_root, Family, SetInstance, SetSpec};
use crate::field::{express_in, squarefree_kernel, FieldExpression};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TileUnion {
    #[serde(rename = "S2r")]
    S2r,
    #[serde(rename = "S2i")]
    S2i,
    /// `S^{2,i}` together with `k√−1`.
    #[serde(rename = "S2i_hat")]
    S2iHat,
}

/// `a ∈ ε·U + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TileIndex {
    pub eps: i8,
    pub n: i64,
    pub union: TileUnion,
}

/// Where `ε(a − n)` sits inside the union.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilePlacement {
    pub tile: TileIndex,
    pub member: AlgebraicNumber,
    /// The instance holding `member`; `None` for `k√−1`.
    pub set: Option<SetSpec>,
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::InvalidParams(format!("{x} out of range")))
}

/// Index of the 2r instance holding a real quadratic integer in `(0,1)`.
fn real_index(x: &AlgebraicNumber) -> Result<i64> {
    small(&x.minpoly().coeffs()[0])
}

/// Index of the 2i instance holding `(b, c)_+` with `b ∈ {0, −1}`, if any.
fn imaginary_index(b: i64, c: &BigInt) -> Option<i64> {
    let c = c.to_i64()?;
    match b {
        -1 if c >= 1 => {
            // h² + 1 ≤ c ≤ (h+1)²
            let mut h = (c - 1).sqrt();
            while (h + 1) * (h + 1) < c {
                h += 1;
            }
            Some(2 * h + 1)
        }
        0 if c >= 2 && !is_perfect_square(&BigInt::from(c)) => Some(2 * c.sqrt()),
        _ => None,
    }
}

/// The tile containing a quadratic integer. Imaginary numbers use `union`
/// (`S2i` or `S2iHat`); elements of `Q(√−1)` have no `S2i` tile.
pub fn tile_locate(a: &AlgebraicNumber, union: TileUnion) -> Result<TilePlacement> {
    if a.degree() != 2 {
        return Err(Error::NotQuadratic);
    }
    match a.root() {
        Root::Real(_) => {
            let fl = a.floor_of()?;
            let frac = a.affine(false, &-&fl);
            let idx = real_index(&frac)?;
            let (eps, n, member) = if idx >= 1 {
                (1, small(&fl)?, frac)
            } else {
                // ⟨a⟩ = 1 − s with s in I_{−idx−2}.
                let s = frac.affine(true, &BigInt::one());
                (-1, small(&fl)? + 1, s)
            };
            let set = SetSpec::real_quadratic(real_index(&member)?);
            Ok(TilePlacement { tile: TileIndex { eps, n, union: TileUnion::S2r }, member, set: Some(set) })
        }
        Root::Complex(h) => {
            // ε(a − n) must be (b', c')_+ with b' ∈ {0, −1}: ε is the
            // half-plane, and n is fixed by the parity of b.
            let eps: i8 = if *h == HalfPlane::Upper { 1 } else { -1 };
            let (b, _, _) = bc_of(a)?;
            let b = small(&b)?;
            // ε = 1: b + 2n ∈ {0, −1}; ε = −1: −b − 2n ∈ {0, −1}
            let n = if eps == 1 { Integer::div_floor(&-b, &2) } else { Integer::div_floor(&(1 - b), &2) };
            let member = a.affine(eps == -1, &BigInt::from(-i64::from(eps) * n));
            let (b2, c2, plus) = bc_of(&member)?;
            debug_assert!(plus);
            let idx = imaginary_index(small(&b2)?, &c2);
            match (idx, union) {
                (Some(k), _) => Ok(TilePlacement {
                    tile: TileIndex { eps, n, union },
                    member,
                    set: Some(SetSpec::imaginary_quadratic(k)),
                }),
                (None, TileUnion::S2iHat) => {
                    Ok(TilePlacement { tile: TileIndex { eps, n, union }, member, set: None })
                }
                (None, _) => Err(Error::InvalidTarget(format!("{} lies in Q(√−1)", a.minpoly()))),
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TilingDomain {
    Real,
    /// Imaginary quadratic integers against `±Ŝ^{2,i} + n`.
    ImaginaryHat,
    /// Imaginary quadratic integers against `±S^{2,i} + n`.
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingViolation {
    pub minpoly: MonicIntPoly,
    pub plus: bool,
    /// Number of tiles found by the brute-force scan.
    pub tiles: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    pub domain: TilingDomain,
    pub bound: i64,
    pub checked: usize,
    pub violations: Vec<TilingViolation>,
}

/// Whether `x` is a member of `S^{2,r}`, decided from its minimal polynomial.
fn in_s2r(x: &AlgebraicNumber) -> Result<bool> {
    if x.degree() != 2 || !x.is_real() {
        return Ok(false);
    }
    let inside = x.cmp_rational(&rat(0, 1))?.is_gt() && x.cmp_rational(&rat(1, 1))?.is_lt();
    Ok(inside && real_index(x)? >= 1)
}

fn in_s2i(x: &AlgebraicNumber, hat: bool) -> Result<bool> {
    let (b, c, plus) = bc_of(x)?;
    if !plus || x.is_real() {
        return Ok(false);
    }
    let b = small(&b)?;
    if imaginary_index(b, &c).is_some() {
        return Ok(true);
    }
    Ok(hat && b == 0 && is_perfect_square(&c) && c.is_positive())
}

/// All tiles containing `a` among `|n| ≤ r`.
fn scan_tiles(a: &AlgebraicNumber, union: TileUnion, r: i64) -> Result<Vec<TileIndex>> {
    let mut out = Vec::new();
    for n in -r..=r {
        for eps in [1i8, -1] {
            let x = a.affine(eps == -1, &BigInt::from(-i64::from(eps) * n));
            let hit = match union {
                TileUnion::S2r => in_s2r(&x)?,
                TileUnion::S2i => in_s2i(&x, false)?,
                TileUnion::S2iHat => in_s2i(&x, true)?,
            };
            if hit {
                out.push(TileIndex { eps, n, union });
            }
        }
    }
    Ok(out)
}

/// Enumerates `x² + bx + c` with `|b|, |c| ≤ bound` in the domain, locates
/// both roots, and cross-checks by a brute-force scan and by rebuilding the
/// instance the member should belong to.
pub fn verify_tiling(bound: i64, domain: TilingDomain) -> Result<TilingReport> {
    if bound < 1 {
        return Err(Error::InvalidParams("bound must be positive".into()));
    }
    let union = match domain {
        TilingDomain::Real => TileUnion::S2r,
        TilingDomain::ImaginaryHat => TileUnion::S2iHat,
        TilingDomain::Imaginary => TileUnion::S2i,
    };
    let mut cache: HashMap<SetSpec, SetInstance> = HashMap::new();
    let mut checked = 0;
    let mut violations = Vec::new();
    for b in -bound..=bound {
        for c in -bound..=bound {
            let p = MonicIntPoly::quadratic(b, c);
            let disc = p.discriminant();
            let wanted = match domain {
                TilingDomain::Real => disc.is_positive() && !is_perfect_square(&disc),
                _ => disc.is_negative(),
            };
            if !wanted {
                continue;
            }
            for plus in [false, true] {
                checked += 1;
                let a = bc_pm(b, c, plus)?;
                let mut fail = |tiles: usize, reason: String| {
                    violations.push(TilingViolation { minpoly: p.clone(), plus, tiles, reason });
                };
                let tiles = scan_tiles(&a, union, bound + 1)?;
                let placed = match tile_locate(&a, union) {
                    Ok(t) => t,
                    Err(e) => {
                        fail(tiles.len(), e.to_string());
                        continue;
                    }
                };
                if tiles != [placed.tile] {
                    fail(tiles.len(), format!("located {:?}, scan found {:?}", placed.tile, tiles));
                    continue;
                }
                // The member must be an element of its instance.
                let ok = match &placed.set {
                    Some(spec) => {
                        if !cache.contains_key(spec) {
                            cache.insert(spec.clone(), build_set(spec)?);
                        }
                        cache[spec].elements.iter().any(|e| e.value.same_value(&placed.member))
                    }
                    None => {
                        let (b2, c2, _) = bc_of(&placed.member)?;
                        b2.is_zero() && is_perfect_square(&c2)
                    }
                };
                if !ok {
                    fail(1, format!("member of {:?} not found in its instance", placed.tile));
                }
            }
        }
    }
    Ok(TilingReport { domain, bound, checked, violations })
}

// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexDomain {
    Real,
    Imaginary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexWitness {
    pub j: i64,
    pub m: i64,
    /// `c = m²·j`, with `n² < c < (n+1)²`.
    pub c: i64,
    /// `−n + √c ∈ I_{2n}^{2,r}` or `√−c ∈ I_{2n}^{2,i}`.
    pub element: AlgebraicNumber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonIndex {
    pub n: i64,
    pub set: SetSpec,
    pub witnesses: Vec<IndexWitness>,
}

/// The `m` with `n² < m²j < (n+1)²`, if one exists.
pub fn index_multiplier(n: i64, j: i64) -> Option<i64> {
    let hi = ((n + 1) * (n + 1) - 1) / j;
    let m = hi.sqrt();
    (m >= 1 && m * m * j > n * n).then_some(m)
}

/// Least `n ≥ 1` such that `I_{2n}` holds a generator of every `Q(√±j)`.
pub fn find_common_index(targets: &[i64], domain: IndexDomain) -> Result<CommonIndex> {
    if targets.is_empty() {
        return Err(Error::InvalidTarget("no targets".into()));
    }
    let distinct: BTreeSet<i64> = targets.iter().copied().collect();
    if distinct.len() != targets.len() {
        return Err(Error::InvalidTarget("targets repeat".into()));
    }
    for &j in targets {
        if j < 2 || squarefree_kernel(&BigInt::from(j))? != BigInt::from(j) {
            return Err(Error::InvalidTarget(format!("{j} is not a square-free integer ≥ 2")));
        }
    }
    let mut n = 1i64;
    loop {
        let ms: Option<Vec<i64>> = targets.iter().map(|&j| index_multiplier(n, j)).collect();
        if let Some(ms) = ms {
            let set = match domain {
                IndexDomain::Real => SetSpec::real_quadratic(2 * n),
                IndexDomain::Imaginary => SetSpec::imaginary_quadratic(2 * n),
            };
            let inst = build_set(&set)?;
            let mut witnesses = Vec::new();
            for (&j, &m) in targets.iter().zip(&ms) {
                let c = m * m * j;
                let element = match domain {
                    // −n + √c is a root of x² + 2nx + n² − c.
                    IndexDomain::Real => bc_pm(2 * n, n * n - c, true)?,
                    IndexDomain::Imaginary => bc_pm(0, c, true)?,
                };
                if !inst.elements.iter().any(|e| e.value.same_value(&element)) {
                    return Err(Error::InvalidParams(format!("witness for {j} missing from {set}")));
                }
                witnesses.push(IndexWitness { j, m, c, element });
            }
            return Ok(CommonIndex { n, set, witnesses });
        }
        n += 1;
        if n > i64::from(i32::MAX).sqrt() {
            return Err(Error::InvalidTarget("no common index in range".into()));
        }
    }
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Integer coordinates of the element in `1, θ, θ²`.
    pub coords: [i64; 3],
    pub element: AlgebraicNumber,
    pub set: SetSpec,
    #[serde(with = "crate::serde_util::bigint")]
    pub coeff: BigInt,
    /// `θ` expressed in the element, i.e. proof that both fields agree.
    pub certificate: FieldExpression,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchResult {
    Found(Box<Witness>),
    NotFoundWithinBound { bound: i64 },
}

/// Characteristic polynomial of multiplication by `a₀ + a₁θ + a₂θ²` on
/// `Z[θ]` for a monic cubic minimal polynomial of `θ`.
pub fn element_charpoly(target: &MonicIntPoly, a: [i64; 3]) -> MonicIntPoly {
    let co = target.coeffs();
    let (p, q, r) = (co[0].clone(), co[1].clone(), co[2].clone());
    // θ³ = −pθ² − qθ − r; reduce a power-basis vector times θ.
    let times_theta = |v: [BigInt; 3]| -> [BigInt; 3] {
        let [v0, v1, v2] = v;
        [-&v2 * &r, v0 - &v2 * &q, v1 - &v2 * &p]
    };
    let e = [BigInt::from(a[0]), BigInt::from(a[1]), BigInt::from(a[2])];
    let c0 = e.clone();
    let c1 = times_theta(c0.clone());
    let c2 = times_theta(c1.clone());
    let m = [c0, c1, c2]; // columns
    let at = |i: usize, j: usize| &m[j][i];
    let tr = at(0, 0) + at(1, 1) + at(2, 2);
    let minor = |i: usize, j: usize| at(i, i) * at(j, j) - at(i, j) * at(j, i);
    let s2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1))
        - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0))
        + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    MonicIntPoly::cubic(-tr, s2, -det)
}

/// The instance of `S_0` holding the root in `(0,1)` of `x³ + cx + d`, if any.
fn s0_member(family: Family, p: &MonicIntPoly) -> Option<(SetSpec, i64)> {
    let co = p.coeffs();
    if !co[0].is_zero() {
        return None;
    }
    let (c, d) = (co[1].to_i64()?, co[2].to_i64()?);
    let spec = match family {
        Family::CubicNotTotallyReal => SetSpec::cubic_ntr(0, c),
        _ => SetSpec::cubic_tr(0, c),
    };
    spec.validate().ok()?;
    let (lo, hi) = spec.coefficient_range();
    (lo..=hi).contains(&d).then_some((spec, d))
}

/// Searches `x = a₀ + a₁θ + a₂θ²` (θ the largest real root of `target`) in
/// shells of growing `max |aᵢ|`, lexicographic within a shell, for a member
/// of `S_0^{3,ntr}` or `S_0^{3,tr}`.
pub fn find_generator(target: &MonicIntPoly, family: Family, coord_bound: i64) -> Result<SearchResult> {
    if target.degree() != 3 || !target.is_irreducible() {
        return Err(Error::InvalidPolynomial(format!("{target} is not an irreducible cubic")));
    }
    let disc = target.discriminant();
    match family {
        Family::CubicNotTotallyReal if disc.is_negative() => {}
        Family::CubicTotallyReal if disc.is_positive() => {}
        Family::CubicNotTotallyReal | Family::CubicTotallyReal => return Err(Error::WrongSignature),
        _ => return Err(Error::InvalidParams("generator search needs a cubic family".into())),
    }
    let roots = crate::exact::isolate_real_roots(target)?;
    let theta = AlgebraicNumber::real_root(target.clone(), roots.intervals.len() - 1)?;
    let co = target.coeffs();
    // tr θ = −p, tr θ² = p² − 2q
    let t1 = -co[0].clone();
    let t2 = &co[0] * &co[0] - BigInt::from(2) * &co[1];
    let (t1, t2) = (small(&t1)?, small(&t2)?);
    let zero = rat(0, 1);
    let one = rat(1, 1);
    for shell in 0..=coord_bound {
        let mut cands = Vec::new();
        for a1 in -shell..=shell {
            for a2 in -shell..=shell {
                // trace 3a₀ + a₁t₁ + a₂t₂ = 0
                let s = a1 * t1 + a2 * t2;
                if s % 3 != 0 {
                    continue;
                }
                let a = [-s / 3, a1, a2];
                if a.iter().map(|x| x.abs()).max() == Some(shell) && (a1, a2) != (0, 0) {
                    cands.push(a);
                }
            }
        }
        cands.sort();
        for a in cands {
            let p = element_charpoly(target, a);
            let Some((set, d)) = s0_member(family, &p) else { continue };
            // Is the value h(θ) itself the member in (0,1)?
            let h: Vec<BigRational> = a.iter().map(|&x| int_rat(x)).collect();
            let mut bits = 32;
            let inside = loop {
                let e = theta.enclosure(bits)?;
                let v = eval(&h, &e);
                if v.lo > zero && v.hi < one {
                    break true;
                }
                if v.hi <= zero || v.lo >= one {
                    break false;
                }
                bits *= 2;
            };
            if !inside {
                continue;
            }
            let element = unit_root(&set.defining_poly(d))?;
            if element.degree() != 3 {
                continue;
            }
            let certificate = express_in(&theta, &element)?
                .ok_or_else(|| Error::InvalidParams("generator candidate failed verification".into()))?;
            return Ok(SearchResult::Found(Box::new(Witness {
                coords: a,
                element,
                set,
                coeff: BigInt::from(d),
                certificate,
            })));
        }
    }
    Ok(SearchResult::NotFoundWithinBound { bound: coord_bound })
}

fn eval(h: &[BigRational], x: &crate::exact::Enclosure) -> crate::exact::Enclosure {
    let mut acc = crate::exact::Enclosure::point(BigRational::zero());
    for c in h.iter().rev() {
        acc = acc.mul(x).add_rat(c);
    }
    acc
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerEntry {
    pub c: i64,
    #[serde(with = "crate::serde_util::bigint")]
    pub d: BigInt,
    pub minpoly: MonicIntPoly,
    /// The 2r instance holding the exception.
    pub index: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadLayerReport {
    pub m: i64,
    pub c_bound: i64,
    pub entries: Vec<LayerEntry>,
    pub excluded: Vec<i64>,
    /// Entries whose index falls in `excluded`.
    pub excluded_hits: Vec<LayerEntry>,
    /// Indices reached, ascending.
    pub reached: Vec<i64>,
    /// Whether the closed-form exceptions agree with a scan of the instances.
    pub closed_form_agrees: bool,
}

/// Indices of the 2r instances never reached by quadratic exceptions.
pub fn excluded_indices(m: i64) -> Result<Vec<i64>> {
    Ok(match m {
        0 => vec![-2, -1, 0, 1],
        -1 | -2 => vec![-2, -1, 0],
        -3 => vec![-3, -2, -1, 0],
        _ => return Err(Error::InvalidParams(format!("m must be in {{0,-1,-2,-3}}, got {m}"))),
    })
}

pub fn quad_layer_report(m: i64, c_bound: i64) -> Result<QuadLayerReport> {
    let excluded = excluded_indices(m)?;
    if c_bound < 3 {
        return Err(Error::InvalidParams("c_bound must be at least 3".into()));
    }
    let mut entries = Vec::new();
    let mut agrees = true;
    for c in (-c_bound..=-m - 3).rev() {
        let s = build_set(&SetSpec::cubic_tr(m, c))?;
        let scanned: Vec<_> = s.elements.iter().filter(|e| e.value.degree() == 2).collect();
        let closed = quadratic_exception(m, c)?;
        match (scanned.as_slice(), &closed) {
            ([], None) => {}
            ([e], Some(q)) if e.coeff == q.d && e.value.same_value(&q.element) => {}
            _ => agrees = false,
        }
        for e in scanned {
            let index = real_index(&e.value)?;
            entries.push(LayerEntry { c, d: e.coeff.clone(), minpoly: e.value.minpoly().clone(), index });
        }
    }
    let excluded_hits = entries.iter().filter(|e| excluded.contains(&e.index)).cloned().collect();
    let reached: BTreeSet<i64> = entries.iter().map(|e| e.index).collect();
    Ok(QuadLayerReport {
        m,
        c_bound,
        entries,
        excluded,
        excluded_hits,
        reached: reached.into_iter().collect(),
        closed_form_agrees: agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locate_real() {
        let t = tile_locate(&bc_pm(0, -2, true).unwrap(), TileUnion::S2r).unwrap();
        assert_eq!((t.tile.eps, t.tile.n), (1, 1));
        assert_eq!(t.set, Some(SetSpec::real_quadratic(2)));
        let t = tile_locate(&bc_pm(-1, -1, true).unwrap(), TileUnion::S2r).unwrap();
        assert_eq!((t.tile.eps, t.tile.n), (1, 1));
        assert_eq!(t.set, Some(SetSpec::real_quadratic(1)));
        // 1 − √2
        let t = tile_locate(&bc_pm(-2, -1, false).unwrap(), TileUnion::S2r).unwrap();
        assert_eq!((t.tile.eps, t.tile.n), (-1, 0));
        assert_eq!(tile_locate(&AlgebraicNumber::integer(3), TileUnion::S2r), Err(Error::NotQuadratic));
    }

    #[test]
    fn small_tilings() {
        assert!(verify_tiling(5, TilingDomain::Real).unwrap().violations.is_empty());
        assert!(verify_tiling(5, TilingDomain::ImaginaryHat).unwrap().violations.is_empty());
        let r = verify_tiling(5, TilingDomain::Imaginary).unwrap();
        assert!(!r.violations.is_empty());
        for v in &r.violations {
            let co = v.minpoly.coeffs();
            assert!(co[0].is_even());
            let k = &co[1] - &co[0] * &co[0] / BigInt::from(4);
            assert!(is_perfect_square(&k));
        }
    }

    #[test]
    fn common_indices() {
        assert_eq!(find_common_index(&[2, 3], IndexDomain::Real).unwrap().n, 1);
        let r = find_common_index(&[2, 5, 6, 7], IndexDomain::Real).unwrap();
        assert_eq!(r.n, 2);
        assert_eq!(r.witnesses.iter().map(|w| w.c).collect::<Vec<_>>(), [8, 5, 6, 7]);
        assert_eq!(find_common_index(&[5], IndexDomain::Imaginary).unwrap().n, 2);
        assert!(matches!(find_common_index(&[4], IndexDomain::Real), Err(Error::InvalidTarget(_))));
    }

    #[test]
    fn generators() {
        let cbrt2 = MonicIntPoly::from_i64s(&[0, 0, -2]).unwrap();
        let SearchResult::Found(w) = find_generator(&cbrt2, Family::CubicNotTotallyReal, 5).unwrap() else {
            panic!("no witness")
        };
        assert_eq!(w.element.degree(), 3);
        let p = MonicIntPoly::from_i64s(&[0, -3, 1]).unwrap();
        let SearchResult::Found(w) = find_generator(&p, Family::CubicTotallyReal, 5).unwrap() else {
            panic!("no witness")
        };
        assert_eq!(w.set, SetSpec::cubic_tr(0, -3));
        assert_eq!(w.element.to_decimal(5).unwrap(), "0.34730");
        assert_eq!(find_generator(&cbrt2, Family::CubicTotallyReal, 5), Err(Error::WrongSignature));
    }

    #[test]
    fn charpoly_of_cube_root_combination() {
        let cbrt2 = MonicIntPoly::from_i64s(&[0, 0, -2]).unwrap();
        assert_eq!(element_charpoly(&cbrt2, [0, 2, -1]), MonicIntPoly::from_i64s(&[0, 12, -12]).unwrap());
    }

    #[test]
    fn layer() {
        let r = quad_layer_report(0, 40).unwrap();
        assert!(r.closed_form_agrees);
        assert!(r.excluded_hits.is_empty());
        let e = r.entries.iter().find(|e| e.c == -5).unwrap();
        assert_eq!(e.index, 2);
    }
}
