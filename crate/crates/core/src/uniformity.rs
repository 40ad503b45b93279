//! Gaps, discrepancy and half-interval counts of sets in the unit interval.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{int_rat, rat, Enclosure};
use crate::exact::{AlgebraicNumber, MonicIntPoly};
use crate::families::{build_set, Family, SetInstance, SetSpec};

/// `numer / denom` for a real algebraic integer `numer`. Needed because the
/// fractional imaginary parts of the odd 2i branch are halves of integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealPoint {
    pub numer: AlgebraicNumber,
    #[serde(with = "crate::serde_util::bigint")]
    pub denom: BigInt,
}

impl RealPoint {
    pub fn new(numer: AlgebraicNumber) -> Self {
        RealPoint { numer, denom: BigInt::one() }
    }

    pub fn enclosure(&self, bits: u64) -> Result<Enclosure> {
        let extra = self.denom.bits();
        let e = self.numer.enclosure(bits.saturating_sub(extra.saturating_sub(1)))?;
        Ok(e.scale(&BigRational::new(BigInt::one(), self.denom.clone())))
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Result<Ordering> {
        self.numer.cmp_rational(&(q * int_rat(self.denom.clone())))
    }

    pub fn cmp(&self, other: &RealPoint) -> Result<Ordering> {
        if self.denom == other.denom {
            return self.numer.cmp_real(&other.numer);
        }
        let mut bits = 16;
        loop {
            let (a, b) = (self.enclosure(bits)?, other.enclosure(bits)?);
            if a.hi < b.lo {
                return Ok(Ordering::Less);
            }
            if b.hi < a.lo {
                return Ok(Ordering::Greater);
            }
            if bits > 1 << 14 {
                return Err(Error::PrecisionExhausted(bits as u32));
            }
            bits *= 2;
        }
    }

    pub fn to_decimal(&self, places: u32) -> Result<String> {
        crate::exact::algebraic::decimal_of(|b| self.enclosure(b), places)
    }
}

/// The points of `s` in `[0, 1)`, ascending: the elements themselves for
/// real families, `⟨Im⟩` for 2i.
pub fn unit_points(s: &SetInstance) -> Result<Vec<RealPoint>> {
    match s.spec.family {
        Family::ImaginaryQuadratic => im_fractional(s),
        _ => Ok(s.values().into_iter().map(RealPoint::new).collect()),
    }
}

/// `⟨Im α⟩` for every element of a 2i instance, ascending. For even `n`
/// the identity `Im(I_n^{2,i}) = I_n^{2,r} + n/2` is checked exactly.
pub fn im_fractional(s: &SetInstance) -> Result<Vec<RealPoint>> {
    if s.spec.family != Family::ImaginaryQuadratic {
        return Err(Error::InvalidParams("im_fractional needs a 2i instance".into()));
    }
    let n = s.spec.n();
    let mut out = Vec::with_capacity(s.len());
    for e in &s.elements {
        let c = e.coeff.clone();
        if n % 2 == 0 {
            // Im = √c with h² < c < (h+1)²: ⟨Im⟩ = √c − h.
            let h = BigInt::from(n / 2);
            let p = MonicIntPoly::quadratic(BigInt::from(2) * &h, &h * &h - &c);
            out.push(RealPoint::new(AlgebraicNumber::real_in(p, rat(0, 1), rat(1, 1))?));
        } else {
            // Im = √(4c−1)/2 ∈ (m, m+1): 2⟨Im⟩ = √(4c−1) − 2m.
            let m = BigInt::from((n - 1) / 2);
            let p = MonicIntPoly::quadratic(BigInt::from(4) * &m, BigInt::from(4) * (&m * &m - &c) + 1);
            out.push(RealPoint { numer: AlgebraicNumber::real_in(p, rat(0, 1), rat(2, 1))?, denom: BigInt::from(2) });
        }
    }
    sort_points(&mut out)?;
    if n % 2 == 0 && !even_im_identity(n, &out)? {
        return Err(Error::InvalidParams(format!("Im(I_{n}^2i) differs from I_{n}^2r + {}", n / 2)));
    }
    Ok(out)
}

/// Checks `⟨Im(I_n^{2,i})⟩ = I_n^{2,r}` elementwise for even `n`, i.e.
/// `Im(I_n^{2,i}) = I_n^{2,r} + n/2`.
pub fn even_im_identity(n: i64, points: &[RealPoint]) -> Result<bool> {
    let real = build_set(&SetSpec::real_quadratic(n))?;
    Ok(real.len() == points.len()
        && real.elements.iter().zip(points).all(|(r, p)| p.denom.is_one() && r.value.same_value(&p.numer)))
}

fn sort_points(v: &mut [RealPoint]) -> Result<()> {
    let mut err = None;
    v.sort_by(|a, b| {
        a.cmp(b).unwrap_or_else(|e| {
            err.get_or_insert(e);
            Ordering::Equal
        })
    });
    err.map_or(Ok(()), Err)
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapStats {
    pub n: usize,
    /// `Δ_i = x_{i+1} − x_i`.
    pub gaps: Vec<Enclosure>,
    /// `max_i |Δ_i − 1/N|`.
    pub max_dev: Enclosure,
    /// `N² · max_dev`, the measured almost-uniformity constant.
    pub constant: Enclosure,
    pub bits: u64,
}

pub fn point_enclosures(points: &[RealPoint], bits: u64) -> Result<Vec<Enclosure>> {
    points.iter().map(|p| p.enclosure(bits)).collect()
}

pub fn gap_stats(points: &[RealPoint], bits: u64) -> Result<GapStats> {
    if points.len() < 2 {
        return Err(Error::TooFewElements);
    }
    let xs = point_enclosures(points, bits)?;
    Ok(gap_stats_of(&xs, bits))
}

fn gap_stats_of(xs: &[Enclosure], bits: u64) -> GapStats {
    let n = xs.len();
    let inv = rat(1, n as i64);
    let gaps: Vec<Enclosure> = xs.windows(2).map(|w| w[1].sub(&w[0])).collect();
    let devs: Vec<Enclosure> = gaps.iter().map(|g| g.add_rat(&-&inv).abs()).collect();
    let lo = devs.iter().map(|d| d.lo.clone()).max().expect("at least one gap");
    let hi = devs.iter().map(|d| d.hi.clone()).max().expect("at least one gap");
    let max_dev = Enclosure::new(lo, hi);
    let constant = max_dev.scale(&int_rat((n * n) as i64));
    GapStats { n, gaps, max_dev, constant, bits }
}

/// Exact `D_N = 1/N + max_i(i/N − x_i) − min_i(i/N − x_i)` for sorted
/// rationals in `[0, 1]`. For `N = 1` this is 1, which is also the supremum
/// over half-open intervals (take `[x₁, x₁+ε)`).
pub fn discrepancy_exact(xs: &[BigRational]) -> BigRational {
    let n = xs.len() as i64;
    let d: Vec<BigRational> = xs.iter().enumerate().map(|(i, x)| rat(i as i64 + 1, n) - x).collect();
    let max = d.iter().max().expect("N ≥ 1").clone();
    let min = d.iter().min().expect("N ≥ 1").clone();
    rat(1, n) + max - min
}

/// The same formula on enclosures of sorted points.
pub fn discrepancy(xs: &[Enclosure]) -> Enclosure {
    let n = xs.len() as i64;
    let d: Vec<Enclosure> = xs.iter().enumerate().map(|(i, x)| x.neg().add_rat(&rat(i as i64 + 1, n))).collect();
    let max_lo = d.iter().map(|e| e.lo.clone()).max().expect("N ≥ 1");
    let max_hi = d.iter().map(|e| e.hi.clone()).max().expect("N ≥ 1");
    let min_lo = d.iter().map(|e| e.lo.clone()).min().expect("N ≥ 1");
    let min_hi = d.iter().map(|e| e.hi.clone()).min().expect("N ≥ 1");
    let base = rat(1, n);
    Enclosure::new(&base + max_lo - min_hi, base + max_hi - min_lo)
}

/// Counts of points below and above 1/2; exact (no point equals 1/2).
pub fn half_split(points: &[RealPoint]) -> Result<(usize, usize)> {
    let half = rat(1, 2);
    let mut below = 0;
    for p in points {
        match p.cmp_rational(&half)? {
            Ordering::Less => below += 1,
            Ordering::Greater => {}
            Ordering::Equal => return Err(Error::RationalRoot),
        }
    }
    Ok((below, points.len() - below))
}

/// How a family's points split around 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HalfRule {
    Equal,
    /// One more point above 1/2 than below.
    AboveByOne,
    BelowByOne,
    /// Equal for even N, off by one for odd N.
    Balanced,
    /// Differ by at least two (even N).
    Unbalanced,
}

impl HalfRule {
    pub fn holds(self, (below, above): (usize, usize)) -> bool {
        let d = above as i64 - below as i64;
        match self {
            HalfRule::Equal => d == 0,
            HalfRule::AboveByOne => d == 1,
            HalfRule::BelowByOne => d == -1,
            HalfRule::Balanced => d.abs() == ((below + above) % 2) as i64,
            HalfRule::Unbalanced => d.abs() >= 2,
        }
    }
}

/// The stated split of an instance, where one is stated.
pub fn half_rule(spec: &SetSpec) -> Option<HalfRule> {
    let even = crate::families::cardinality(spec).ok()? % 2 == 0;
    let n = spec.n();
    Some(match spec.family {
        Family::RealQuadratic | Family::ImaginaryQuadratic if even => HalfRule::Equal,
        Family::RealQuadratic if n < 0 => HalfRule::BelowByOne,
        Family::RealQuadratic | Family::ImaginaryQuadratic => HalfRule::AboveByOne,
        Family::CubicNotTotallyReal => match spec.m() {
            _ if even && (-3..=0).contains(&spec.m()) => HalfRule::Equal,
            0 | -1 => HalfRule::AboveByOne,
            -2 | -3 => HalfRule::BelowByOne,
            _ if even => HalfRule::Unbalanced,
            _ => return None,
        },
        Family::CubicTotallyReal if (-3..=0).contains(&spec.m()) => HalfRule::Balanced,
        Family::CubicTotallyReal => return None,
    })
}

/// An explicit inequality from a uniformity proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GapBound {
    /// `max |Δ_i − 1/N| < bound` (or `≤` when not strict).
    MaxDeviation {
        #[serde(with = "crate::serde_util::rational")]
        bound: BigRational,
        strict: bool,
    },
    /// Every gap lies in `lo ≤ Δ < hi` (`lo < Δ` when `lo_strict`).
    GapRange {
        #[serde(with = "crate::serde_util::rational")]
        lo: BigRational,
        lo_strict: bool,
        #[serde(with = "crate::serde_util::rational")]
        hi: BigRational,
    },
}

impl std::fmt::Display for GapBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GapBound::MaxDeviation { bound, strict } => {
                write!(f, "max deviation from 1/N {} {bound}", if *strict { "<" } else { "<=" })
            }
            GapBound::GapRange { lo, lo_strict, hi } => {
                write!(f, "{lo} {} gap < {hi}", if *lo_strict { "<" } else { "<=" })
            }
        }
    }
}

/// Proof-level bounds available for an instance.
pub fn theorem_bounds(spec: &SetSpec) -> Vec<GapBound> {
    let mut out = Vec::new();
    match spec.family {
        Family::ImaginaryQuadratic if spec.n() % 2 != 0 && spec.n() >= 3 => {
            let n = spec.n();
            out.push(GapBound::MaxDeviation { bound: rat(1, n * (n - 1)), strict: true });
        }
        Family::CubicTotallyReal if (-3..=0).contains(&spec.m()) => {
            // Gaps are invariant under the reflection (b, c) ↦ (−b−3, 2b+c+3).
            let (b, c) = if spec.m() <= -2 {
                (-spec.m() - 3, 2 * spec.m() + spec.n() + 3)
            } else {
                (spec.m(), spec.n())
            };
            let n = -b - c - 2;
            if n < 2 {
                return out;
            }
            if b == -1 {
                // (−c + 1/3)⁻¹ ≤ Δ < (−c − 1)⁻¹
                out.push(GapBound::GapRange { lo: rat(3, 1 - 3 * c), lo_strict: false, hi: rat(1, -c - 1) });
                out.push(GapBound::MaxDeviation { bound: rat(4, n * (3 * n + 4)), strict: false });
            } else if c < -2 * b - 3 {
                out.push(GapBound::GapRange { lo: rat(1, -c), lo_strict: true, hi: rat(1, -3 - 2 * b - c) });
                let a = rat(b + 2, n * (n + b + 2));
                let z = rat(b + 1, n * (n - b - 1));
                out.push(GapBound::MaxDeviation { bound: a.max(z), strict: true });
            }
        }
        _ => {}
    }
    out
}

impl GapBound {
    /// `Some(holds)` once decided at this precision.
    fn decide(&self, s: &GapStats) -> Option<bool> {
        match self {
            GapBound::MaxDeviation { bound, strict } => {
                let (lo, hi) = (&s.max_dev.lo, &s.max_dev.hi);
                if hi < bound || (!strict && hi == bound) {
                    Some(true)
                } else if lo > bound || (*strict && lo == bound) {
                    Some(false)
                } else {
                    None
                }
            }
            GapBound::GapRange { lo, lo_strict, hi } => {
                let mut all = true;
                for g in &s.gaps {
                    let above = if *lo_strict { g.lo > *lo } else { g.lo >= *lo };
                    let below = g.hi < *hi;
                    let out = if *lo_strict { g.hi <= *lo } else { g.hi < *lo } || g.lo >= *hi;
                    if out {
                        return Some(false);
                    }
                    all &= above && below;
                }
                all.then_some(true)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: GapBound,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniformityReport {
    pub spec: SetSpec,
    pub points: Vec<RealPoint>,
    pub stats: GapStats,
    pub discrepancy: Enclosure,
    /// Whether `D_N ≤ (1 + 2c)/N` for the measured constant `c`.
    pub discrepancy_within: bool,
    pub half_counts: (usize, usize),
    pub half_rule: Option<HalfRule>,
    pub half_rule_holds: Option<bool>,
    pub bound_checks: Vec<BoundCheck>,
}

impl UniformityReport {
    pub fn all_hold(&self) -> bool {
        self.discrepancy_within && self.half_rule_holds != Some(false) && self.bound_checks.iter().all(|b| b.holds)
    }
}

const MAX_BITS: u64 = 1 << 14;

pub fn uniformity_report(s: &SetInstance, bits: u64) -> Result<UniformityReport> {
    let points = unit_points(s)?;
    if points.len() < 2 {
        return Err(Error::TooFewElements);
    }
    let bounds = theorem_bounds(&s.spec);
    let mut bits = bits.max(8);
    loop {
        let xs = point_enclosures(&points, bits)?;
        let stats = gap_stats_of(&xs, bits);
        let disc = discrepancy(&xs);
        let n = int_rat(points.len() as i64);
        // D ≤ (1 + 2c)/N with c known only as an enclosure: decide on the
        // lower end of c.
        let limit = (BigRational::one() + &stats.constant.lo * int_rat(2)) / &n;
        let within = if disc.hi <= limit {
            Some(true)
        } else if disc.lo > (BigRational::one() + &stats.constant.hi * int_rat(2)) / &n {
            Some(false)
        } else {
            None
        };
        let decided: Option<Vec<BoundCheck>> = bounds
            .iter()
            .map(|b| b.decide(&stats).map(|holds| BoundCheck { bound: b.clone(), holds }))
            .collect();
        if let (Some(within), Some(bound_checks)) = (within, decided) {
            let half_counts = half_split(&points)?;
            let half_rule = half_rule(&s.spec);
            return Ok(UniformityReport {
                spec: s.spec.clone(),
                points,
                stats,
                discrepancy: disc,
                discrepancy_within: within,
                half_counts,
                half_rule,
                half_rule_holds: half_rule.map(|r| r.holds(half_counts)),
                bound_checks,
            });
        }
        if bits >= MAX_BITS {
            return Err(Error::PrecisionExhausted(bits as u32));
        }
        bits *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(spec: SetSpec) -> Vec<RealPoint> {
        unit_points(&build_set(&spec).unwrap()).unwrap()
    }

    fn dec(e: &Enclosure) -> f64 {
        e.to_f64()
    }

    #[test]
    fn small_quadratic_gaps() {
        let s = gap_stats(&pts(SetSpec::real_quadratic(2)), 40).unwrap();
        assert_eq!(s.gaps.len(), 1);
        assert!((dec(&s.gaps[0]) - 0.31784).abs() < 1e-5);
        assert!((dec(&s.max_dev) - 0.18216).abs() < 1e-5);
        assert_eq!(gap_stats(&pts(SetSpec::real_quadratic(1)), 40), Err(Error::TooFewElements));
    }

    #[test]
    fn discrepancy_examples() {
        assert_eq!(discrepancy_exact(&[rat(1, 4), rat(3, 4)]), rat(1, 2));
        assert_eq!(discrepancy_exact(&[rat(0, 1), rat(1, 1)]), rat(1, 1));
        assert_eq!(discrepancy_exact(&[rat(5, 8)]), rat(1, 1));
    }

    #[test]
    fn half_splits() {
        assert_eq!(half_split(&pts(SetSpec::real_quadratic(4))).unwrap(), (2, 2));
        assert_eq!(half_split(&pts(SetSpec::real_quadratic(3))).unwrap(), (1, 2));
        assert_eq!(half_split(&pts(SetSpec::real_quadratic(-3))).unwrap(), (1, 0));
    }

    #[test]
    fn imaginary_parts() {
        let p = pts(SetSpec::imaginary_quadratic(2));
        let d: Vec<String> = p.iter().map(|x| x.to_decimal(5).unwrap()).collect();
        assert_eq!(d, ["0.41421", "0.73205"]);
        let p = pts(SetSpec::imaginary_quadratic(1));
        assert_eq!(p[0].to_decimal(5).unwrap(), "0.86603");
        let s = build_set(&SetSpec::imaginary_quadratic(4)).unwrap();
        assert!(even_im_identity(4, &im_fractional(&s).unwrap()).unwrap());
    }

    #[test]
    fn proof_bounds() {
        let r = uniformity_report(&build_set(&SetSpec::imaginary_quadratic(101)).unwrap(), 64).unwrap();
        assert_eq!(r.bound_checks.len(), 1);
        assert!(r.all_hold());
        let r = uniformity_report(&build_set(&SetSpec::cubic_tr(-1, -50)).unwrap(), 64).unwrap();
        assert!(r.bound_checks.iter().all(|b| b.holds), "{:?}", r.bound_checks);
        assert_eq!(r.half_rule_holds, Some(true));
    }
}
