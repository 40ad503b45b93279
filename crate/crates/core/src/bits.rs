//! Certified binary expansions of set elements.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::interval::{floor_rat, int_rat, rat};
use crate::exact::AlgebraicNumber;
use crate::families::{Family, SetInstance, SetSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitStream {
    pub source: AlgebraicNumber,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<SetSpec>,
    pub bits: Vec<u8>,
}

impl BitStream {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn to_text(&self) -> String {
        self.bits.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
    }

    /// Big-endian hex; a trailing partial nibble is padded with zeros.
    pub fn to_hex(&self) -> String {
        self.bits
            .chunks(4)
            .map(|c| {
                let v = c.iter().enumerate().fold(0u32, |acc, (i, b)| acc | (u32::from(*b) << (3 - i)));
                char::from_digit(v, 16).expect("nibble")
            })
            .collect()
    }

    /// `k` with the emitted prefix equal to `k / 2^L`.
    pub fn numerator(&self) -> BigInt {
        self.bits.iter().fold(BigInt::zero(), |acc, b| (acc << 1) + BigInt::from(*b))
    }
}

/// The first `len` binary digits of `a ∈ (0,1)`. The isolating interval is
/// refined until it fits in one dyadic cell of width `2^-len`; since `a` is
/// irrational it never sits on a cell boundary.
pub fn binary_expansion(a: &AlgebraicNumber, len: usize) -> Result<BitStream> {
    if a.degree() < 2 {
        return Err(Error::RationalInput(floor_rat(&a.enclosure(0)?.lo)));
    }
    if !(a.cmp_rational(&rat(0, 1))?.is_gt() && a.cmp_rational(&rat(1, 1))?.is_lt()) {
        return Err(Error::InvalidParams("binary expansion needs a value in (0,1)".into()));
    }
    let scale = int_rat(BigInt::one() << len);
    let mut bits = len as u64 + 8;
    let k = loop {
        let e = a.enclosure(bits)?;
        let k = floor_rat(&(&e.lo * &scale));
        if e.hi * &scale <= int_rat(&k + 1) {
            break k;
        }
        bits += bits / 2 + 8;
    };
    let out = (0..len).rev().map(|i| u8::from(k.bit(i as u64))).collect();
    Ok(BitStream { source: a.clone(), spec: None, bits: out })
}

/// Binary expansions of every element of a real instance.
pub fn instance_streams(s: &SetInstance, len: usize) -> Result<Vec<BitStream>> {
    s.elements
        .iter()
        .map(|e| {
            let mut b = binary_expansion(&e.value, len)?;
            b.spec = Some(s.spec.clone());
            Ok(b)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementReport {
    pub spec: SetSpec,
    pub checked: usize,
    /// Pairs `(i, j)` with `1 − x_i = x_j`.
    pub violations: Vec<(usize, usize)>,
}

/// Checks that `1 − α` is never an element alongside `α`.
pub fn complement_check(s: &SetInstance) -> Result<ComplementReport> {
    if s.spec.family == Family::ImaginaryQuadratic {
        return Err(Error::InvalidParams("complement check needs a real family".into()));
    }
    let mut violations = Vec::new();
    for (i, e) in s.elements.iter().enumerate() {
        let r = e.value.affine(true, &BigInt::one());
        for (j, f) in s.elements.iter().enumerate() {
            if f.value.same_value(&r) {
                violations.push((i, j));
            }
        }
    }
    Ok(ComplementReport { spec: s.spec.clone(), checked: s.len(), violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitStats {
    pub ones: usize,
    pub zeros: usize,
    pub longest_run: usize,
    pub runs_count: usize,
}

pub fn bit_stats(bits: &[u8]) -> BitStats {
    let ones = bits.iter().filter(|b| **b == 1).count();
    let (mut longest, mut runs, mut cur) = (0, 0, 0);
    for (i, b) in bits.iter().enumerate() {
        if i == 0 || bits[i - 1] != *b {
            runs += 1;
            cur = 0;
        }
        cur += 1;
        longest = longest.max(cur);
    }
    BitStats { ones, zeros: bits.len() - ones, longest_run: longest, runs_count: runs }
}
