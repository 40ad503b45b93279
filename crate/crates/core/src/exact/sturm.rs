//! Sturm sequences and real root isolation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::interval::{int_rat, Enclosure};
use super::poly::MonicIntPoly;
use crate::error::{Error, Result};

/// Integer polynomial in ascending order, scaled to be primitive.
type IntPoly = Vec<BigInt>;

#[derive(Clone, Debug)]
pub struct SturmSeq {
    polys: Vec<IntPoly>,
}

impl SturmSeq {
    pub fn new(p: &MonicIntPoly) -> Self {
        let p0 = p.ascending();
        let p1: IntPoly = p0.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
        let mut polys = vec![p0, p1];
        loop {
            let n = polys.len();
            let r = neg_rem(&polys[n - 2], &polys[n - 1]);
            if r.is_empty() {
                break;
            }
            polys.push(r);
        }
        SturmSeq { polys }
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.polys.iter().map(|p| sign_int_poly(p, x)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        count_variations(self.polys.iter().map(|p| {
            let s = p.last().map_or(Ordering::Equal, sign_of);
            if (p.len() - 1) % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        count_variations(self.polys.iter().map(|p| p.last().map_or(Ordering::Equal, sign_of)))
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

fn sign_of(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sign_int_poly(p: &IntPoly, x: &BigRational) -> Ordering {
    let (n, q) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    // Horner from the top: acc = Σ a_i n^i q^(k-i), same sign as p(n/q).
    for c in p.iter().rev() {
        acc = acc * n + c * &qpow;
        qpow *= q;
    }
    sign_of(&acc)
}

/// `-(a mod b)` scaled by a positive constant to a primitive integer polynomial.
fn neg_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r: Vec<BigRational> = a.iter().cloned().map(BigRational::from_integer).collect();
    let lb = BigRational::from_integer(b.last().expect("nonzero divisor").clone());
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let q = r.last().expect("nonempty") / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[i + k] -= &q * BigRational::from_integer(bc.clone());
        }
        r.pop();
    }
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    if r.is_empty() {
        return Vec::new();
    }
    let l = r.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = r.iter().map(|c| -(c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Disjoint isolating intervals for the real roots, sorted increasingly,
/// and the number of complex-conjugate pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationList {
    pub intervals: Vec<Enclosure>,
    pub complex_pairs: usize,
}

/// Isolates every real root of a squarefree polynomial. Endpoints are
/// dyadic, never roots, and every interval has width at most 1.
pub fn isolate_real_roots(p: &MonicIntPoly) -> Result<IsolationList> {
    if p.discriminant().is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let sturm = SturmSeq::new(p);
    let bound = int_rat(p.root_bound_int() + 1);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= BigRational::one() {
            out.push(Enclosure::new(lo, hi));
            continue;
        }
        let mid = split_point(p, &lo, &hi);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    let complex_pairs = (p.degree() - out.len()) / 2;
    Ok(IsolationList { intervals: out, complex_pairs })
}

/// A dyadic point strictly inside `(lo, hi)` that is not a root of `p`.
pub(crate) fn split_point(p: &MonicIntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mut den = BigInt::from(2);
    loop {
        // Try the midpoint first, then nearby dyadic points.
        let mut k = BigInt::one();
        while k < den {
            let x = lo + &w * BigRational::new(k.clone(), den.clone());
            if p.sign_at(&x) != Ordering::Equal {
                return x;
            }
            k += 2;
            if k > BigInt::from(7) {
                break;
            }
        }
        den <<= 1;
    }
}

/// Shrinks an isolating interval `[lo, hi]` (signs of `p` differ at the
/// ends) by bisection until its width is at most `2^-bits`. Returns a point
/// interval if a bisection point happens to be a root.
pub fn bisect_to(p: &MonicIntPoly, e: &Enclosure, bits: u64) -> Enclosure {
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    if e.width() <= target {
        return e.clone();
    }
    match (dyadic_parts(&e.lo), dyadic_parts(&e.hi)) {
        (Some((ml, kl)), Some((mh, kh))) => bisect_dyadic(p, ml, kl, mh, kh, bits),
        _ => {
            let (mut lo, mut hi) = (e.lo.clone(), e.hi.clone());
            let s_lo = p.sign_at(&lo);
            while &hi - &lo > target {
                let mid = (&lo + &hi) / BigInt::from(2);
                match p.sign_at(&mid) {
                    Ordering::Equal => return Enclosure::point(mid),
                    s if s == s_lo => lo = mid,
                    _ => hi = mid,
                }
            }
            Enclosure::new(lo, hi)
        }
    }
}

fn bisect_dyadic(
    p: &MonicIntPoly,
    ml: BigInt,
    kl: u64,
    mh: BigInt,
    kh: u64,
    bits: u64,
) -> Enclosure {
    let mut k = kl.max(kh);
    let mut lo = ml << (k - kl);
    let mut hi = mh << (k - kh);
    let s_lo = p.sign_at_dyadic(&lo, k);
    // width = (hi - lo) / 2^k ≤ 2^-bits  ⇔  (hi - lo) ≤ 2^(k - bits)
    let fits = |lo: &BigInt, hi: &BigInt, k: u64| {
        let w = hi - lo;
        if k >= bits {
            w <= BigInt::one() << (k - bits)
        } else {
            (w << (bits - k)) <= BigInt::one()
        }
    };
    while !fits(&lo, &hi, k) {
        let mid = &lo + &hi;
        k += 1;
        lo <<= 1;
        hi <<= 1;
        match p.sign_at_dyadic(&mid, k) {
            Ordering::Equal => return Enclosure::point(dyadic(&mid, k)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Enclosure::new(dyadic(&lo, k), dyadic(&hi, k))
}

/// `x = m / 2^k` with `k` minimal, if `x` is dyadic.
pub fn dyadic_parts(x: &BigRational) -> Option<(BigInt, u64)> {
    let d = x.denom();
    let k = d.trailing_zeros().unwrap_or(0);
    if (BigInt::one() << k) == *d {
        Some((x.numer().clone(), k))
    } else {
        None
    }
}

pub fn dyadic(m: &BigInt, k: u64) -> BigRational {
    BigRational::new(m.clone(), BigInt::one() << k)
}

/// Roots strictly inside the rational interval `(lo, hi)` by Sturm count.
pub fn roots_in_open(p: &MonicIntPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let s = SturmSeq::new(p);
    let n = s.count(lo, hi);
    if p.sign_at(hi) == Ordering::Equal {
        n - 1
    } else {
        n
    }
}
