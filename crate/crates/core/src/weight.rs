//! Exact rational scalars and weight vectors.
//!
//! Every coordinate is a [`BigRational`]. The canonical text form of a scalar
//! is `a/b` in lowest terms with `b > 0`, or just `a` when `b = 1`; weights
//! are written as comma-separated scalars. Decimal input is rejected.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `n / 2`.
pub fn q_half(n: i64) -> Q {
    q_frac(n, 2)
}

pub fn is_integer(q: &Q) -> bool {
    q.is_integer()
}

/// True for elements of ℤ_{>0}; `3/2` is not.
pub fn is_positive_integer(q: &Q) -> bool {
    q.is_integer() && q.is_positive()
}

pub fn format_q(q: &Q) -> String {
    // Ratio keeps itself reduced with a positive denominator.
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Q::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(parse_int(num)?, den))
        }
    }
}

/// Serde adapter writing a scalar as its canonical string.
pub mod q_serde {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

/// A point of the weight lattice tensored with ℚ, in standard `e_i` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight(xs.iter().map(|&x| q_int(x)).collect())
    }

    /// Builds a weight from numerators over 2, so `from_halves(&[3, -1])` is `(3/2, -1/2)`.
    pub fn from_halves(xs: &[i64]) -> Self {
        Weight(xs.iter().map(|&x| q_half(x)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn expect_len(&self, len: usize) -> Result<()> {
        if self.len() == len {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: len,
                found: self.len(),
            })
        }
    }

    /// Standard Euclidean dot product against an integer vector.
    pub fn dot_int(&self, v: &[i64]) -> Result<Q> {
        self.expect_len(v.len())?;
        Ok(self
            .0
            .iter()
            .zip(v)
            .filter(|(_, &c)| c != 0)
            .fold(Q::zero(), |acc, (x, &c)| acc + x * q_int(c)))
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.expect_len(other.len())?;
        Ok(Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// Integer coordinates, if every entry is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().try_into().ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// `(-x_r, ..., -x_1)`.
    pub fn negate_reverse(&self) -> Weight {
        Weight(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Splits at `mid` into two owned blocks.
    pub fn split_blocks(&self, mid: usize) -> (Weight, Weight) {
        let (l, r) = self.0.split_at(mid);
        (Weight(l.to_vec()), Weight(r.to_vec()))
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Weight(v)
    }

    /// Formats with a `|` after the first `mid` coordinates.
    pub fn display_blocks(&self, mid: usize) -> String {
        let (l, r) = self.split_blocks(mid);
        format!("{l} | {r}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_q).collect();
        f.write_str(&parts.join(", "))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',').map(parse_q).collect::<Result<Vec<_>>>().map(Weight)
    }
}

impl Add for &Weight {
    type Output = Weight;

    /// Panics on length mismatch; use [`Weight::checked_add`] for fallible input.
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weight lengths differ")
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight lengths differ");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.0.iter().map(format_q).collect();
        parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        parts
            .iter()
            .map(|p| parse_q(p))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}
