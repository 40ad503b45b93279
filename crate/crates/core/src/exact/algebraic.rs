//! Algebraic numbers of degree ≤ 3 given by a minimal polynomial and a root
//! selector.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::complex::complex_pair;
use super::interval::{ceil_rat, floor_rat, format_fixed, int_rat, Enclosure};
use super::poly::MonicIntPoly;
use super::sturm::{bisect_to, isolate_real_roots, roots_in_open};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HalfPlane {
    Upper,
    Lower,
}

impl HalfPlane {
    pub fn flip(self) -> Self {
        match self {
            HalfPlane::Upper => HalfPlane::Lower,
            HalfPlane::Lower => HalfPlane::Upper,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Root {
    /// Isolating interval: the polynomial is nonzero with opposite signs at
    /// the two ends, or `lo == hi` is the (rational) root itself.
    Real(Enclosure),
    Complex(HalfPlane),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicNumber {
    minpoly: MonicIntPoly,
    root: Root,
}

impl AlgebraicNumber {
    /// The unique root of an irreducible `minpoly` strictly inside `(lo, hi)`.
    pub fn real_in(minpoly: MonicIntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if !minpoly.is_irreducible() {
            return Err(Error::InvalidPolynomial(format!("{minpoly} is reducible")));
        }
        let (sl, sh) = (minpoly.sign_at(&lo), minpoly.sign_at(&hi));
        if lo >= hi || sl == Ordering::Equal || sh == Ordering::Equal || sl == sh {
            return Err(Error::InvalidPolynomial(format!(
                "{minpoly} has no sign change on [{lo}, {hi}]"
            )));
        }
        if roots_in_open(&minpoly, &lo, &hi) != 1 {
            return Err(Error::InvalidPolynomial(format!(
                "[{lo}, {hi}] does not isolate a root of {minpoly}"
            )));
        }
        Ok(AlgebraicNumber { minpoly, root: Root::Real(Enclosure::new(lo, hi)) })
    }

    /// The `index`-th smallest real root of an irreducible polynomial.
    pub fn real_root(minpoly: MonicIntPoly, index: usize) -> Result<Self> {
        if !minpoly.is_irreducible() {
            return Err(Error::InvalidPolynomial(format!("{minpoly} is reducible")));
        }
        let iso = isolate_real_roots(&minpoly)?;
        let e = iso.intervals.get(index).cloned().ok_or_else(|| {
            Error::InvalidParams(format!("{minpoly} has {} real roots", iso.intervals.len()))
        })?;
        Ok(AlgebraicNumber { minpoly, root: Root::Real(e) })
    }

    /// A non-real root of an irreducible polynomial with one conjugate pair.
    pub fn complex(minpoly: MonicIntPoly, half: HalfPlane) -> Result<Self> {
        if minpoly.degree() < 2 || !minpoly.discriminant().is_negative() {
            return Err(Error::InvalidPolynomial(format!("{minpoly} has no complex pair")));
        }
        if !minpoly.is_irreducible() {
            return Err(Error::InvalidPolynomial(format!("{minpoly} is reducible")));
        }
        Ok(AlgebraicNumber { minpoly, root: Root::Complex(half) })
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        AlgebraicNumber {
            minpoly: MonicIntPoly::linear(-&n),
            root: Root::Real(Enclosure::point(int_rat(n))),
        }
    }

    pub fn minpoly(&self) -> &MonicIntPoly {
        &self.minpoly
    }

    pub fn root(&self) -> &Root {
        &self.root
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn is_real(&self) -> bool {
        matches!(self.root, Root::Real(_))
    }

    pub fn interval(&self) -> Option<&Enclosure> {
        match &self.root {
            Root::Real(e) => Some(e),
            Root::Complex(_) => None,
        }
    }

    pub fn half_plane(&self) -> Option<HalfPlane> {
        match self.root {
            Root::Complex(h) => Some(h),
            Root::Real(_) => None,
        }
    }

    /// Sum of conjugates.
    pub fn trace(&self) -> BigInt {
        -self.minpoly.coeffs()[0].clone()
    }

    /// Product of conjugates.
    pub fn norm(&self) -> BigInt {
        let c = self.minpoly.constant().clone();
        if self.degree() % 2 == 1 {
            -c
        } else {
            c
        }
    }

    /// Narrows a real isolating interval to width ≤ `2^-bits`; complex
    /// numbers are returned unchanged.
    pub fn refine(&self, bits: u64) -> Self {
        match &self.root {
            Root::Real(e) => AlgebraicNumber {
                minpoly: self.minpoly.clone(),
                root: Root::Real(bisect_to(&self.minpoly, e, bits)),
            },
            Root::Complex(_) => self.clone(),
        }
    }

    /// Enclosure of a real value with width ≤ `2^-bits`.
    pub fn enclosure(&self, bits: u64) -> Result<Enclosure> {
        match &self.root {
            Root::Real(e) => Ok(bisect_to(&self.minpoly, e, bits)),
            Root::Complex(_) => Err(Error::Unsupported("real enclosure of a non-real number".into())),
        }
    }

    /// Enclosures of the real and imaginary parts, each of width ≤ `2^-bits`.
    pub fn re_im(&self, bits: u64) -> Result<(Enclosure, Enclosure)> {
        match &self.root {
            Root::Real(_) => Ok((self.enclosure(bits)?, Enclosure::point(BigRational::zero()))),
            Root::Complex(h) => {
                let (re, im) = match self.degree() {
                    2 => {
                        let c = self.minpoly.coeffs();
                        let re = BigRational::new(-c[0].clone(), BigInt::from(2));
                        // Im = sqrt(4c - b²) / 2
                        let d = int_rat(BigInt::from(4) * &c[1] - &c[0] * &c[0]);
                        let im = Enclosure::point(d).sqrt(bits + 1).scale(&BigRational::new(
                            BigInt::one(),
                            BigInt::from(2),
                        ));
                        (Enclosure::point(re), im)
                    }
                    _ => {
                        let z = complex_pair(&self.minpoly, bits)?;
                        (z.re, z.im)
                    }
                };
                match h {
                    HalfPlane::Upper => Ok((re, im)),
                    HalfPlane::Lower => Ok((re, im.neg())),
                }
            }
        }
    }

    /// Exact comparison of a real number with a rational; no refinement.
    pub fn cmp_rational(&self, q: &BigRational) -> Result<Ordering> {
        let e = self.interval().ok_or(Error::Unsupported("ordering of a non-real number".into()))?;
        if e.lo == e.hi {
            return Ok(e.lo.cmp(q));
        }
        if q <= &e.lo {
            return Ok(Ordering::Greater);
        }
        if q >= &e.hi {
            return Ok(Ordering::Less);
        }
        let sq = self.minpoly.sign_at(q);
        if sq == Ordering::Equal {
            return Ok(Ordering::Equal);
        }
        // Same sign as at lo ⇒ the root lies in (q, hi).
        Ok(if sq == self.minpoly.sign_at(&e.lo) { Ordering::Greater } else { Ordering::Less })
    }

    /// Whether both denote the same complex number.
    pub fn same_value(&self, other: &AlgebraicNumber) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        match (&self.root, &other.root) {
            (Root::Complex(a), Root::Complex(b)) => a == b,
            (Root::Real(a), Root::Real(b)) => {
                let lo = std::cmp::max(&a.lo, &b.lo).clone();
                let hi = std::cmp::min(&a.hi, &b.hi).clone();
                if lo > hi {
                    return false;
                }
                // The intersection lies inside one isolating interval, so it
                // holds at most one root; both must be it.
                let inside = |x: &AlgebraicNumber| {
                    x.cmp_rational(&lo).map(|o| o != Ordering::Less).unwrap_or(false)
                        && x.cmp_rational(&hi).map(|o| o != Ordering::Greater).unwrap_or(false)
                };
                inside(self) && inside(other)
            }
            _ => false,
        }
    }

    /// Exact order of two real algebraic numbers.
    pub fn cmp_real(&self, other: &AlgebraicNumber) -> Result<Ordering> {
        if self.same_value(other) {
            return Ok(Ordering::Equal);
        }
        let mut a = self.interval().ok_or(Error::Unsupported("non-real".into()))?.clone();
        let mut b = other.interval().ok_or(Error::Unsupported("non-real".into()))?.clone();
        let mut bits = 8;
        loop {
            if a.hi < b.lo || (a.hi == b.lo && (a.lo < a.hi || b.lo < b.hi)) {
                return Ok(Ordering::Less);
            }
            if b.hi < a.lo || (b.hi == a.lo && (a.lo < a.hi || b.lo < b.hi)) {
                return Ok(Ordering::Greater);
            }
            a = bisect_to(&self.minpoly, &a, bits);
            b = bisect_to(&other.minpoly, &b, bits);
            bits *= 2;
        }
    }

    /// `⌊a⌋` for a real number.
    pub fn floor_of(&self) -> Result<BigInt> {
        let e = self.interval().ok_or(Error::Unsupported("floor of a non-real number".into()))?;
        if e.lo == e.hi {
            return Ok(floor_rat(&e.lo));
        }
        let mut e = e.clone();
        loop {
            let f = floor_rat(&e.lo);
            let next = &f + BigInt::one();
            if e.hi <= int_rat(next.clone()) {
                return Ok(f);
            }
            // An integer strictly inside the interval: check it is not a root.
            let k = ceil_rat(&e.lo);
            if e.lo < int_rat(k.clone()) && int_rat(k.clone()) < e.hi && self.minpoly.eval(&k).is_zero() {
                return Err(Error::RationalInput(k));
            }
            let w = e.width();
            let bits = (w.denom().bits() as i64 - w.numer().bits() as i64 + 2).max(1) as u64;
            e = bisect_to(&self.minpoly, &e, bits);
        }
    }

    /// `a − ⌊a⌋`, with the minimal polynomial shifted accordingly.
    pub fn fractional_part(&self) -> Result<Self> {
        let f = self.floor_of()?;
        Ok(self.affine(false, &(-f)))
    }

    /// `sign·a + shift`.
    pub fn affine(&self, negate: bool, shift: &BigInt) -> Self {
        let minpoly = self.minpoly.affine_substitute(negate, shift);
        let root = match &self.root {
            Root::Real(e) => {
                let e = if negate { e.neg() } else { e.clone() };
                Root::Real(e.add_rat(&int_rat(shift.clone())))
            }
            Root::Complex(h) => Root::Complex(if negate { h.flip() } else { *h }),
        };
        AlgebraicNumber { minpoly, root }
    }

    /// Decimal rendering of a real number rounded half-even.
    pub fn to_decimal(&self, places: u32) -> Result<String> {
        let e = self.interval().ok_or(Error::Unsupported("non-real".into()))?;
        decimal_of(|bits| Ok(bisect_to(&self.minpoly, e, bits)), places)
    }

    pub fn to_f64(&self) -> f64 {
        match self.re_im(60) {
            Ok((re, _)) => re.to_f64(),
            Err(_) => f64::NAN,
        }
    }
}

/// Rounds the value enclosed by `enclose(bits)` to `places` decimals,
/// refining until the rounding is decided.
pub fn decimal_of(
    enclose: impl Fn(u64) -> Result<Enclosure>,
    places: u32,
) -> Result<String> {
    let mut bits = 4 * places as u64 + 8;
    loop {
        let e = enclose(bits)?;
        if let Some(v) = e.round_decimal(places) {
            return Ok(format_fixed(&v, places, false));
        }
        if bits > 4096 {
            return Err(Error::PrecisionExhausted(bits as u32));
        }
        bits *= 2;
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.root {
            Root::Real(e) => write!(f, "root of {} in {}", self.minpoly, e),
            Root::Complex(HalfPlane::Upper) => write!(f, "upper root of {}", self.minpoly),
            Root::Complex(HalfPlane::Lower) => write!(f, "lower root of {}", self.minpoly),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::interval::rat;

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::real_in(MonicIntPoly::from_i64s(&[0, -2]).unwrap(), rat(1, 1), rat(2, 1)).unwrap()
    }

    #[test]
    fn floor_and_fraction() {
        let a = sqrt2();
        assert_eq!(a.floor_of().unwrap(), BigInt::from(1));
        let f = a.fractional_part().unwrap();
        assert_eq!(f.minpoly(), &MonicIntPoly::from_i64s(&[2, -1]).unwrap());

        let neg = a.affine(true, &BigInt::zero());
        assert_eq!(neg.floor_of().unwrap(), BigInt::from(-2));
        let nf = neg.fractional_part().unwrap();
        assert_eq!(nf.minpoly(), &MonicIntPoly::from_i64s(&[-4, 2]).unwrap());
        assert_eq!(nf.to_decimal(5).unwrap(), "0.58579");

        let q = AlgebraicNumber::real_in(MonicIntPoly::from_i64s(&[-3, 1]).unwrap(), rat(0, 1), rat(1, 1))
            .unwrap();
        assert_eq!(q.floor_of().unwrap(), BigInt::zero());
    }

    #[test]
    fn rejects_bad_intervals() {
        let p = MonicIntPoly::from_i64s(&[0, -2]).unwrap();
        assert!(AlgebraicNumber::real_in(p.clone(), rat(-2, 1), rat(2, 1)).is_err());
        assert!(AlgebraicNumber::real_in(p, rat(2, 1), rat(3, 1)).is_err());
        let reducible = MonicIntPoly::from_i64s(&[0, -4]).unwrap();
        assert!(AlgebraicNumber::real_in(reducible, rat(1, 1), rat(3, 1)).is_err());
    }

    #[test]
    fn ordering_and_identity() {
        let a = sqrt2();
        let b = a.refine(30);
        assert!(a.same_value(&b));
        assert_eq!(a.cmp_real(&b).unwrap(), Ordering::Equal);
        let c = AlgebraicNumber::real_in(MonicIntPoly::from_i64s(&[0, -3]).unwrap(), rat(1, 1), rat(2, 1))
            .unwrap();
        assert_eq!(a.cmp_real(&c).unwrap(), Ordering::Less);
        assert_eq!(a.cmp_rational(&rat(141, 100)).unwrap(), Ordering::Greater);
        assert_eq!(a.cmp_rational(&rat(142, 100)).unwrap(), Ordering::Less);
    }

    #[test]
    fn refine_tightens_and_is_noop_at_zero() {
        let g = AlgebraicNumber::real_in(MonicIntPoly::from_i64s(&[1, -1]).unwrap(), rat(0, 1), rat(1, 1))
            .unwrap();
        assert_eq!(g.refine(0), g);
        let r = g.refine(20);
        let e = r.interval().unwrap();
        assert!(e.width() <= rat(1, 1 << 20));
        assert!(e.lo <= rat(618034, 1_000_000) && rat(618033, 1_000_000) <= e.hi);
    }

    #[test]
    fn imaginary_quadratic_parts() {
        let a = AlgebraicNumber::complex(MonicIntPoly::from_i64s(&[-1, 1]).unwrap(), HalfPlane::Upper).unwrap();
        let (re, im) = a.re_im(40).unwrap();
        assert_eq!(re, Enclosure::point(rat(1, 2)));
        assert_eq!(im.round_decimal(5), Some(BigInt::from(86603)));
        let moved = a.affine(true, &BigInt::from(1));
        assert_eq!(moved.minpoly(), a.minpoly());
        assert_eq!(moved.half_plane(), Some(HalfPlane::Lower));
    }
}
