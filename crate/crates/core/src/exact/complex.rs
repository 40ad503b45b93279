//! The complex-conjugate pair of a cubic with negative discriminant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::interval::{int_rat, Enclosure};
use super::poly::MonicIntPoly;
use super::sturm::{bisect_to, isolate_real_roots};
use crate::error::{Error, Result};

/// Rigorous enclosures of the upper-half-plane root `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexEnclosure {
    pub re: Enclosure,
    pub im: Enclosure,
}

/// Upper root of a cubic with one real root `r`: the pair solves
/// `x² + (b+r)x + (c + r(b+r))`, so `re = −(b+r)/2` and
/// `im² = c + r(b+r) − re²`.
pub fn complex_pair(p: &MonicIntPoly, bits: u64) -> Result<ComplexEnclosure> {
    if p.degree() != 3 {
        return Err(Error::InvalidPolynomial(format!("{p} is not cubic")));
    }
    let disc = p.discriminant();
    if disc.is_positive() {
        return Err(Error::PositiveDiscriminant);
    }
    let iso = isolate_real_roots(p)?;
    let mut r = iso.intervals.into_iter().next().expect("a cubic has a real root");
    let (b, c) = (int_rat(p.coeffs()[0].clone()), int_rat(p.coeffs()[1].clone()));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let mut work = bits + 8;
    loop {
        r = bisect_to(p, &r, work);
        let s = r.add_rat(&b);
        let re = s.scale(&(-&half));
        let im2 = r.mul(&s).add_rat(&c).sub(&re.mul(&re));
        if im2.lo.is_positive() {
            let im = im2.sqrt(work + 2);
            if re.width() <= target && im.width() <= target {
                return Ok(ComplexEnclosure { re, im });
            }
        }
        work += work / 2 + 8;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rounded(e: &Enclosure) -> i64 {
        use num_traits::ToPrimitive;
        e.round_decimal(5).expect("decided").to_i64().unwrap()
    }

    #[test]
    fn table_values() {
        let z = complex_pair(&MonicIntPoly::from_i64s(&[0, -1, -1]).unwrap(), 40).unwrap();
        assert_eq!((rounded(&z.re), rounded(&z.im)), (-66236, 56228));
        let z = complex_pair(&MonicIntPoly::from_i64s(&[0, 0, -2]).unwrap(), 40).unwrap();
        assert_eq!((rounded(&z.re), rounded(&z.im)), (-62996, 109112));
        let z = complex_pair(&MonicIntPoly::from_i64s(&[-2, 1, -1]).unwrap(), 40).unwrap();
        assert_eq!((rounded(&z.re), rounded(&z.im)), (12256, 74486));
    }

    #[test]
    fn totally_real_rejected() {
        let p = MonicIntPoly::from_i64s(&[0, -3, 1]).unwrap();
        assert_eq!(complex_pair(&p, 10), Err(Error::PositiveDiscriminant));
    }
}
