//! Monic integer polynomials of degree at most three.
//!
//! Coefficients below the leading term are stored in descending order, so
//! `[b, c, d]` is `x³ + bx² + cx + d` and `[b, c]` is `x² + bx + c`. This is
//! also the JSON form: an array whose length is the degree.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::serde_util::JsonInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonicIntPoly {
    coeffs: Vec<BigInt>,
}

impl MonicIntPoly {
    /// Builds `x^k + coeffs[0] x^(k-1) + ... + coeffs[k-1]` for `k = coeffs.len()`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > 3 {
            return Err(Error::InvalidPolynomial(format!(
                "degree must be 1, 2 or 3, got {}",
                coeffs.len()
            )));
        }
        Ok(MonicIntPoly { coeffs })
    }

    pub fn linear(c: impl Into<BigInt>) -> Self {
        MonicIntPoly { coeffs: vec![c.into()] }
    }

    pub fn quadratic(b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        MonicIntPoly { coeffs: vec![b.into(), c.into()] }
    }

    pub fn cubic(b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        MonicIntPoly { coeffs: vec![b.into(), c.into(), d.into()] }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Non-leading coefficients, highest power first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, including the implicit leading 1.
    pub fn coeff(&self, i: usize) -> BigInt {
        let k = self.degree();
        match i.cmp(&k) {
            Ordering::Greater => BigInt::zero(),
            Ordering::Equal => BigInt::one(),
            Ordering::Less => self.coeffs[k - 1 - i].clone(),
        }
    }

    /// All coefficients in ascending order of power, leading 1 last.
    pub fn ascending(&self) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        v.push(BigInt::one());
        v
    }

    /// Constant term.
    pub fn constant(&self) -> &BigInt {
        self.coeffs.last().expect("degree >= 1")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::one(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `p(x)` computed from the homogenized integer form, no division.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        // q^k p(n/q) = sum_i a_i n^i q^(k-i); q > 0 keeps the sign.
        let (n, q) = (x.numer(), x.denom());
        let mut acc = BigInt::one();
        let mut qpow = BigInt::one();
        for c in &self.coeffs {
            qpow *= q;
            acc = acc * n + c * &qpow;
        }
        acc.sign_cmp()
    }

    /// Sign of `p(m / 2^k)`.
    pub fn sign_at_dyadic(&self, m: &BigInt, k: u64) -> Ordering {
        let mut acc = BigInt::one();
        let mut shift = 0u64;
        for c in &self.coeffs {
            shift += k;
            acc = acc * m + (c << shift);
        }
        acc.sign_cmp()
    }

    pub fn discriminant(&self) -> BigInt {
        let c = &self.coeffs;
        match self.degree() {
            1 => BigInt::one(),
            2 => &c[0] * &c[0] - BigInt::from(4) * &c[1],
            _ => {
                let (b, c, d) = (&c[0], &c[1], &c[2]);
                BigInt::from(18) * b * c * d - BigInt::from(4) * b * b * b * d + b * b * c * c
                    - BigInt::from(4) * c * c * c
                    - BigInt::from(27) * d * d
            }
        }
    }

    /// Irreducible over Q. For monic integer polynomials of degree ≤ 3 this
    /// is the absence of an integer root.
    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            1 => true,
            2 => !is_perfect_square(&self.discriminant()),
            _ => self.integer_roots().is_empty(),
        }
    }

    /// All distinct integer roots, ascending.
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let c = &self.coeffs;
        let mut roots = match self.degree() {
            1 => vec![-&c[0]],
            2 => {
                let disc = self.discriminant();
                if disc.is_negative() || !is_perfect_square(&disc) {
                    vec![]
                } else {
                    let s = disc.sqrt();
                    [-&c[0] - &s, -&c[0] + &s]
                        .into_iter()
                        .filter(|v| v.is_even())
                        .map(|v| v / 2)
                        .collect()
                }
            }
            _ => self.cubic_integer_roots(),
        };
        roots.sort();
        roots.dedup();
        roots
    }

    fn cubic_integer_roots(&self) -> Vec<BigInt> {
        let (b, c) = (&self.coeffs[0], &self.coeffs[1]);
        let bound = self.root_bound_int();
        let mut out = Vec::new();
        let mut scan = |lo: BigInt, hi: BigInt, increasing: bool| {
            if let Some(r) = monotone_integer_root(self, lo, hi, increasing) {
                out.push(r);
            }
        };
        // Critical points of x³+bx²+cx+d are (-b ± sqrt(b²-3c))/3.
        let delta = b * b - BigInt::from(3) * c;
        if delta.is_positive() {
            let s = delta.sqrt();
            let three = BigInt::from(3);
            // a <= cp1 < a + 2 and cc <= cp2 < cc + 2
            let a = (-b - &s - BigInt::one()).div_floor(&three);
            let cc = (-b + &s).div_floor(&three);
            scan(-&bound, a.clone(), true);
            scan(&a + 2, cc.clone(), false);
            scan(&cc + 2, bound.clone(), true);
            for extra in [&a + 1, &cc + 1] {
                if self.eval(&extra).is_zero() {
                    out.push(extra);
                }
            }
        } else {
            scan(-&bound, bound.clone(), true);
        }
        out
    }

    /// `1 + max |coefficient|`, a bound on the absolute value of every root.
    pub fn root_bound_int(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default() + 1
    }

    /// Quotient of `p(x) / (x - r)`. `r` must be a root.
    pub fn deflate(&self, r: &BigInt) -> Result<MonicIntPoly> {
        if self.degree() < 2 {
            return Err(Error::InvalidPolynomial("cannot deflate a linear polynomial".into()));
        }
        let mut acc = BigInt::one();
        let mut quotient = Vec::with_capacity(self.degree() - 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc * r + c;
            if i + 1 < self.coeffs.len() {
                quotient.push(acc.clone());
            }
        }
        if !acc.is_zero() {
            return Err(Error::InvalidPolynomial(format!("{r} is not a root of {self}")));
        }
        MonicIntPoly::new(quotient)
    }

    /// Polynomial satisfied by `sign·x + shift` when `x` is a root of `self`:
    /// the monic normalization of `p(sign·(y - shift))`.
    pub fn affine_substitute(&self, negate: bool, shift: &BigInt) -> MonicIntPoly {
        let shift = BigRational::from_integer(shift.clone());
        self.rational_affine_substitute(negate, &shift)
            .expect("integer substitution stays integral")
    }

    /// As [`affine_substitute`](Self::affine_substitute) with a rational
    /// shift; fails unless the result has integer coefficients.
    pub fn rational_affine_substitute(
        &self,
        negate: bool,
        shift: &BigRational,
    ) -> Result<MonicIntPoly> {
        // y = sign·x + shift  ⇒  x = sign·(y - shift)
        let s = if negate { -BigRational::one() } else { BigRational::one() };
        let lin = [-(&s * shift), s.clone()];
        let asc: Vec<BigRational> = self
            .ascending()
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut result = vec![asc.last().cloned().expect("nonempty")];
        for a in asc.iter().rev().skip(1) {
            result = poly_mul_rat(&result, &lin);
            result[0] += a;
        }
        let lead = result.last().cloned().expect("nonempty");
        let mut coeffs = Vec::with_capacity(self.degree());
        for c in result.iter().rev().skip(1) {
            let v = c / &lead;
            if !v.is_integer() {
                return Err(Error::InvalidPolynomial(format!(
                    "shift by {shift} leaves non-integral coefficient {v}"
                )));
            }
            coeffs.push(v.to_integer());
        }
        MonicIntPoly::new(coeffs)
    }

    /// Rendering such as `x³−2x²+x−1`; `unicode = false` gives `x^3-2x^2+x-1`.
    pub fn render(&self, unicode: bool) -> String {
        let k = self.degree();
        let minus = if unicode { "\u{2212}" } else { "-" };
        let mut s = power_of_x(k, unicode);
        for (i, c) in self.coeffs.iter().enumerate() {
            let power = k - 1 - i;
            if c.is_zero() {
                continue;
            }
            s.push_str(if c.is_negative() { minus } else { "+" });
            let a = c.abs();
            if power == 0 || !a.is_one() {
                s.push_str(&a.to_string());
            }
            if power > 0 {
                s.push_str(&power_of_x(power, unicode));
            }
        }
        s
    }
}

fn power_of_x(k: usize, unicode: bool) -> String {
    match (k, unicode) {
        (1, _) => "x".into(),
        (2, true) => "x²".into(),
        (3, true) => "x³".into(),
        (k, _) => format!("x^{k}"),
    }
}

impl fmt::Display for MonicIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl Serialize for MonicIntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<JsonInt> = self.coeffs.iter().cloned().map(JsonInt).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonicIntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<JsonInt> = Vec::deserialize(d)?;
        MonicIntPoly::new(v.into_iter().map(|j| j.0).collect()).map_err(serde::de::Error::custom)
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Integer `r` in `[lo, hi]` with `p(r) = 0`, given that `p` is monotone there.
fn monotone_integer_root(
    p: &MonicIntPoly,
    mut lo: BigInt,
    mut hi: BigInt,
    increasing: bool,
) -> Option<BigInt> {
    while lo <= hi {
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        let v = p.eval(&mid);
        if v.is_zero() {
            return Some(mid);
        }
        if v.is_positive() == increasing {
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    None
}

pub(crate) fn poly_mul_rat(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
