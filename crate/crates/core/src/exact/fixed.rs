//! Fixed-point complex numbers, used only to *search* for field
//! certificates; every positive answer is then verified exactly.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};

/// `(re + im·i) / 2^w`; the scale `w` is carried by the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Fx {
    pub re: BigInt,
    pub im: BigInt,
}

/// A working precision: all [`Fx`] values in one computation share it.
#[derive(Clone, Copy, Debug)]
pub struct Prec(pub u64);

impl Fx {
    pub fn real(re: BigInt) -> Self {
        Fx { re, im: BigInt::zero() }
    }

    pub fn from_int(n: &BigInt, p: Prec) -> Self {
        Fx::real(n << p.0)
    }

    pub fn mul(&self, o: &Fx, p: Prec) -> Fx {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Fx { re: re >> p.0, im: im >> p.0 }
    }

    pub fn div(&self, o: &Fx, p: Prec) -> Result<Fx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return Err(Error::PrecisionExhausted(p.0 as u32));
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << p.0;
        let im = (&self.im * &o.re - &self.re * &o.im) << p.0;
        Ok(Fx { re: re.div_floor(&den), im: im.div_floor(&den) })
    }

    /// Principal square root of a real fixed-point value (imaginary when negative).
    pub fn sqrt_real(x: &BigInt, p: Prec) -> Fx {
        let s = (x.abs() << p.0).sqrt();
        if x.is_negative() {
            Fx { re: BigInt::zero(), im: s }
        } else {
            Fx::real(s)
        }
    }

    pub fn shr1(&self) -> Fx {
        Fx { re: &self.re >> 1, im: &self.im >> 1 }
    }
}

impl Add for &Fx {
    type Output = Fx;
    fn add(self, o: &Fx) -> Fx {
        Fx { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &Fx {
    type Output = Fx;
    fn sub(self, o: &Fx) -> Fx {
        Fx { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Neg for &Fx {
    type Output = Fx;
    fn neg(self) -> Fx {
        Fx { re: -&self.re, im: -&self.im }
    }
}

impl Mul<&BigInt> for &Fx {
    type Output = Fx;
    fn mul(self, k: &BigInt) -> Fx {
        Fx { re: &self.re * k, im: &self.im * k }
    }
}

/// The three conjugates of a real cubic algebraic number at precision `p`,
/// with the number itself first; the others are the roots of the deflated
/// quadratic `x² + (b+α)x + (c + α(b+α))`.
pub fn cubic_conjugates(a: &AlgebraicNumber, p: Prec) -> Result<[Fx; 3]> {
    if a.degree() != 3 || !a.is_real() {
        return Err(Error::Unsupported("conjugates of a non-real or non-cubic number".into()));
    }
    let e = a.enclosure(p.0 + 2)?;
    let alpha = Fx::real(scaled_floor(&e.lo, p));
    let co = a.minpoly().coeffs();
    let b = Fx::from_int(&co[0], p);
    let c = Fx::from_int(&co[1], p);
    let bb = &b + &alpha;
    let cc = &c + &alpha.mul(&bb, p);
    let disc = &bb.mul(&bb, p) - &(&cc * &BigInt::from(4));
    let s = Fx::sqrt_real(&disc.re, p);
    let r1 = (&(-&bb) - &s).shr1();
    let r2 = (&(-&bb) + &s).shr1();
    Ok([alpha, r1, r2])
}

pub fn scaled_floor(x: &BigRational, p: Prec) -> BigInt {
    (x.numer() << p.0).div_floor(x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::MonicIntPoly;

    fn to_f(x: &BigInt, p: Prec) -> f64 {
        use num_traits::ToPrimitive;
        x.to_f64().unwrap() / 2f64.powi(p.0 as i32)
    }

    #[test]
    fn conjugates_of_cube_root() {
        let p = Prec(100);
        let a = AlgebraicNumber::real_root(MonicIntPoly::from_i64s(&[0, 0, -2]).unwrap(), 0).unwrap();
        let [r, z1, z2] = cubic_conjugates(&a, p).unwrap();
        assert!((to_f(&r.re, p) - 1.259921).abs() < 1e-6);
        assert!((to_f(&z1.re, p) + 0.629960).abs() < 1e-6);
        assert!((to_f(&z1.im, p) + 1.091124).abs() < 1e-6);
        assert!((to_f(&z2.im, p) - 1.091124).abs() < 1e-6);
    }

    #[test]
    fn division_round_trip() {
        let p = Prec(64);
        let x = Fx { re: BigInt::from(3) << 64, im: BigInt::from(-2) << 64 };
        let y = Fx { re: BigInt::from(1) << 63, im: BigInt::from(5) << 64 };
        let q = x.div(&y, p).unwrap();
        let back = q.mul(&y, p);
        assert!((&back.re - &x.re).abs() < BigInt::from(1 << 10));
        assert!((&back.im - &x.im).abs() < BigInt::from(1 << 10));
    }
}
