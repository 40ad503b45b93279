//! Closed rational enclosures and exact decimal rounding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]` of rationals known to contain some value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enclosure {
    #[serde(with = "crate::serde_util::rational")]
    pub lo: BigRational,
    #[serde(with = "crate::serde_util::rational")]
    pub hi: BigRational,
}

impl Enclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "inverted enclosure");
        Enclosure { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn add(&self, o: &Enclosure) -> Enclosure {
        Enclosure::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Enclosure) -> Enclosure {
        Enclosure::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Enclosure {
        Enclosure::new(-&self.hi, -&self.lo)
    }

    pub fn add_rat(&self, r: &BigRational) -> Enclosure {
        Enclosure::new(&self.lo + r, &self.hi + r)
    }

    pub fn scale(&self, r: &BigRational) -> Enclosure {
        if r.is_negative() {
            Enclosure::new(&self.hi * r, &self.lo * r)
        } else {
            Enclosure::new(&self.lo * r, &self.hi * r)
        }
    }

    pub fn mul(&self, o: &Enclosure) -> Enclosure {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().cloned().expect("four products");
        let hi = c.iter().max().cloned().expect("four products");
        Enclosure::new(lo, hi)
    }

    pub fn abs(&self) -> Enclosure {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = std::cmp::max(-&self.lo, self.hi.clone());
            Enclosure::new(BigRational::zero(), hi)
        }
    }

    /// Enclosure of the square root; the lower endpoint is clamped at zero.
    /// Endpoints are dyadic with `bits` fractional bits.
    pub fn sqrt(&self, bits: u64) -> Enclosure {
        let scale = BigInt::one() << (2 * bits);
        let lo = if self.lo.is_positive() {
            floor_rat(&(&self.lo * &scale)).sqrt()
        } else {
            BigInt::zero()
        };
        let hi_scaled = ceil_rat(&(&self.hi * &scale));
        let mut hi = hi_scaled.sqrt();
        if &hi * &hi < hi_scaled {
            hi += 1;
        }
        let den = BigInt::one() << bits;
        Enclosure::new(BigRational::new(lo, den.clone()), BigRational::new(hi, den))
    }

    pub fn lt_rat(&self, r: &BigRational) -> Option<bool> {
        if &self.hi < r {
            Some(true)
        } else if &self.lo >= r {
            Some(false)
        } else {
            None
        }
    }

    pub fn le_rat(&self, r: &BigRational) -> Option<bool> {
        if &self.hi <= r {
            Some(true)
        } else if &self.lo > r {
            Some(false)
        } else {
            None
        }
    }

    /// Round-half-even to `places` decimals, if every value in the enclosure
    /// rounds the same way.
    pub fn round_decimal(&self, places: u32) -> Option<BigInt> {
        let a = round_half_even(&self.lo, places);
        let b = round_half_even(&self.hi, places);
        (a == b).then_some(a)
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub fn floor_rat(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil_rat(x: &BigRational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `x · 10^places` rounded to the nearest integer, ties to even.
pub fn round_half_even(x: &BigRational, places: u32) -> BigInt {
    let scaled = x * BigRational::from_integer(BigInt::from(10).pow(places));
    let fl = floor_rat(&scaled);
    let frac = &scaled - BigRational::from_integer(fl.clone());
    let half = rat(1, 2);
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => fl,
        std::cmp::Ordering::Greater => fl + 1,
        std::cmp::Ordering::Equal => {
            if fl.is_even() {
                fl
            } else {
                fl + 1
            }
        }
    }
}

/// Renders `scaled / 10^places` with exactly `places` decimals.
pub fn format_fixed(scaled: &BigInt, places: u32, unicode_minus: bool) -> String {
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let sign = match (neg, unicode_minus) {
        (false, _) => "",
        (true, true) => "\u{2212}",
        (true, false) => "-",
    };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

pub fn rat_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_even_rounding() {
        assert_eq!(round_half_even(&rat(25, 10), 0), BigInt::from(2));
        assert_eq!(round_half_even(&rat(35, 10), 0), BigInt::from(4));
        assert_eq!(round_half_even(&rat(-25, 10), 0), BigInt::from(-2));
        assert_eq!(round_half_even(&rat(1_234_565, 10_000_000), 5), BigInt::from(12346));
        assert_eq!(round_half_even(&rat(123_455, 1_000_000), 5), BigInt::from(12346));
        assert_eq!(round_half_even(&rat(123_445, 1_000_000), 5), BigInt::from(12344));
    }

    #[test]
    fn fixed_formatting() {
        assert_eq!(format_fixed(&BigInt::from(132472), 5, true), "1.32472");
        assert_eq!(format_fixed(&BigInt::from(-66236), 5, true), "\u{2212}0.66236");
        assert_eq!(format_fixed(&BigInt::from(-5), 5, false), "-0.00005");
        assert_eq!(format_fixed(&BigInt::from(0), 5, false), "0.00000");
    }

    #[test]
    fn sqrt_enclosure_contains_root() {
        let e = Enclosure::new(rat(2, 1), rat(2, 1)).sqrt(30);
        assert!(e.lo.clone() * &e.lo <= rat(2, 1));
        assert!(e.hi.clone() * &e.hi >= rat(2, 1));
        assert!(e.width() <= rat(1, 1 << 29));
    }

    #[test]
    fn interval_ops() {
        let a = Enclosure::new(rat(-1, 1), rat(2, 1));
        let b = Enclosure::new(rat(3, 1), rat(4, 1));
        assert_eq!(a.mul(&b), Enclosure::new(rat(-4, 1), rat(8, 1)));
        assert_eq!(a.sub(&b), Enclosure::new(rat(-5, 1), rat(-1, 1)));
        assert_eq!(a.abs(), Enclosure::new(rat(0, 1), rat(2, 1)));
        assert_eq!(a.lt_rat(&rat(3, 1)), Some(true));
        assert_eq!(a.lt_rat(&rat(0, 1)), None);
    }
}
