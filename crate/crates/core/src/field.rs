//! Coefficient fields and exact rank of sparse integer matrices over them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse vector: `(index, value)` pairs with strictly increasing indices
/// and no zero values.
pub type SparseVec = Vec<(usize, i64)>;

/// Serialized as its spec string: `"q"` or `"gf:<p>"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    /// Rank of the matrix whose columns (or rows; rank is the same) are `vectors`.
    pub fn rank(&self, vectors: &[SparseVec]) -> usize {
        match *self {
            FieldSpec::Rationals => rank_rational(vectors),
            FieldSpec::PrimeField(p) => rank_mod_p(vectors, p as u64),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::PrimeField(Self::DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix("gf:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::FieldSpec(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Echelon insertion over GF(p): each incoming vector is reduced by the
/// stored pivot with the same leading index until it vanishes or finds a
/// free leading index.
pub fn rank_mod_p(vectors: &[SparseVec], p: u64) -> usize {
    let mut pivots: std::collections::HashMap<usize, Vec<(usize, u64)>> = Default::default();
    for v in vectors {
        let mut cur: Vec<(usize, u64)> = v
            .iter()
            .map(|&(i, x)| (i, x.rem_euclid(p as i64) as u64))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(lead, lv)) = cur.first() {
            match pivots.get(&lead) {
                Some(piv) => {
                    // cur <- cur - lv * piv (piv has leading 1)
                    let factor = p - lv;
                    cur = merge(&cur, piv, |a, b| (a + factor * b) % p, |x| *x == 0);
                }
                None => {
                    let inv = inv_mod(lv, p);
                    let normalized = cur.iter().map(|&(i, x)| (i, x * inv % p)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Fraction-free elimination over the integers (hence over Q): a vector is
/// reduced as `piv_lead * cur - cur_lead * piv` and then divided by the gcd
/// of its entries to keep coefficients small.
pub fn rank_rational(vectors: &[SparseVec]) -> usize {
    let mut pivots: std::collections::HashMap<usize, Vec<(usize, BigInt)>> = Default::default();
    for v in vectors {
        let mut cur: Vec<(usize, BigInt)> =
            v.iter().filter(|&&(_, x)| x != 0).map(|&(i, x)| (i, BigInt::from(x))).collect();
        while let Some((lead, lv)) = cur.first().cloned() {
            match pivots.get(&lead) {
                Some(piv) => {
                    let pl = piv[0].1.clone();
                    let scaled: Vec<(usize, BigInt)> =
                        cur.iter().map(|(i, x)| (*i, x * &pl)).collect();
                    let neg = -lv;
                    cur = merge(&scaled, piv, |a, b| a + &neg * b, |x| x.is_zero());
                    primitive_part(&mut cur);
                }
                None => {
                    primitive_part(&mut cur);
                    pivots.insert(lead, cur);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn primitive_part(v: &mut [(usize, BigInt)]) {
    let g = v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    if !g.is_zero() && !g.abs().is_one() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Merges two sparse vectors entrywise with `combine(a, b)`, treating missing
/// entries as zero, and drops results for which `is_zero` holds.
fn merge<T: Clone + Default>(
    a: &[(usize, T)],
    b: &[(usize, T)],
    combine: impl Fn(T, &T) -> T,
    is_zero: impl Fn(&T) -> bool,
) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (idx, val) = match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) if ia == ib => {
                i += 1;
                j += 1;
                (*ia, combine(va.clone(), vb))
            }
            (Some((ia, va)), Some((ib, _))) if ia < ib => {
                i += 1;
                (*ia, va.clone())
            }
            (Some((ia, va)), None) => {
                i += 1;
                (*ia, va.clone())
            }
            (_, Some((ib, vb))) => {
                j += 1;
                (*ib, combine(T::default(), vb))
            }
            (None, None) => unreachable!(),
        };
        if !is_zero(&val) {
            out.push((idx, val));
        }
    }
    out
}
