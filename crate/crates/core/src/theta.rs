//! Weight maps of the duality correspondences for `(U(p), U(m,n))` and
//! `(O(n), Sp(2p))`, the lowest-to-highest weight conversions, and the
//! enumeration of admissible parameters.
//!
//! A parameter stores only its strictly nonzero entries. The constant middle
//! blocks of the weights are filled in when a formula is applied.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{q_half, q_int, Weight};

fn check_positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be >= 1")))
    } else {
        Ok(())
    }
}

fn is_weakly_decreasing(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

fn list(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A `U(p)` parameter `(a; b)` for the pair `(U(p), U(m,n))`.
///
/// `a₁ ≥ … ≥ a_k > 0` and `0 > b₁ ≥ … ≥ b_l`. A relaxed parameter skips the
/// `k + l ≤ p` constraint so that analysis examples outside the
/// correspondence can be expressed; `k ≤ m` and `l ≤ n` still hold because
/// they are block lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitarySigma {
    a: Vec<i64>,
    b: Vec<i64>,
    p: u32,
    m: u32,
    n: u32,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    relaxed: bool,
}

impl UnitarySigma {
    /// Strict parameter; fails unless every correspondence constraint holds.
    pub fn new(a: Vec<i64>, b: Vec<i64>, p: u32, m: u32, n: u32) -> Result<Self> {
        let s = Self::unchecked(a, b, p, m, n, false)?;
        s.validate()?;
        Ok(s)
    }

    /// Parameter exempt from `k + l ≤ p`.
    pub fn relaxed(a: Vec<i64>, b: Vec<i64>, p: u32, m: u32, n: u32) -> Result<Self> {
        let s = Self::unchecked(a, b, p, m, n, true)?;
        s.validate()?;
        Ok(s)
    }

    /// Accepts zero-padded `a` (trailing zeros) and `b` (leading zeros).
    pub fn from_padded(a: &[i64], b: &[i64], p: u32, m: u32, n: u32, relaxed: bool) -> Result<Self> {
        let a: Vec<i64> = a.iter().copied().filter(|&x| x != 0).collect();
        let b: Vec<i64> = b.iter().copied().filter(|&x| x != 0).collect();
        if relaxed {
            Self::relaxed(a, b, p, m, n)
        } else {
            Self::new(a, b, p, m, n)
        }
    }

    fn unchecked(a: Vec<i64>, b: Vec<i64>, p: u32, m: u32, n: u32, relaxed: bool) -> Result<Self> {
        check_positive("p", p)?;
        check_positive("m", m)?;
        check_positive("n", n)?;
        if a.iter().any(|&x| x <= 0) || !is_weakly_decreasing(&a) {
            return Err(Error::InvalidParameter(format!(
                "a = {} must be weakly decreasing with positive entries",
                list(&a)
            )));
        }
        if b.iter().any(|&x| x >= 0) || !is_weakly_decreasing(&b) {
            return Err(Error::InvalidParameter(format!(
                "b = {} must be weakly decreasing with negative entries",
                list(&b)
            )));
        }
        Ok(UnitarySigma {
            a,
            b,
            p,
            m,
            n,
            relaxed,
        })
    }

    /// Checks `k ≤ m`, `l ≤ n` and, unless relaxed, `k + l ≤ p`.
    pub fn validate(&self) -> Result<()> {
        let (k, l) = (self.k(), self.l());
        if k > self.m as usize {
            return Err(Error::Constraint {
                inequality: "k <= m".into(),
                detail: format!("k = {k}, m = {}", self.m),
            });
        }
        if l > self.n as usize {
            return Err(Error::Constraint {
                inequality: "l <= n".into(),
                detail: format!("l = {l}, n = {}", self.n),
            });
        }
        if !self.relaxed && k + l > self.p as usize {
            return Err(Error::Constraint {
                inequality: "k + l <= p".into(),
                detail: format!("k + l = {}, p = {}", k + l, self.p),
            });
        }
        Ok(())
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn l(&self) -> usize {
        self.b.len()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    /// The `U(p)` highest weight `(a + s, s, …, s, b + s)` with `s = (m-n)/2`.
    ///
    /// Display metadata only; `None` when `k + l > p`.
    pub fn as_unitary_weight(&self) -> Option<Weight> {
        let p = self.p as usize;
        if self.k() + self.l() > p {
            return None;
        }
        let shift = q_half(self.m as i64 - self.n as i64);
        let mut coords: Vec<_> = self.a.iter().map(|&x| q_int(x) + &shift).collect();
        coords.extend(std::iter::repeat_n(shift.clone(), p - self.k() - self.l()));
        coords.extend(self.b.iter().map(|&x| q_int(x) + &shift));
        Some(Weight::new(coords))
    }

    fn sort_key(&self) -> (usize, usize, &[i64], &[i64]) {
        (self.k(), self.l(), &self.a, &self.b)
    }
}

impl fmt::Display for UnitarySigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={}", list(&self.a), list(&self.b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Epsilon {
    Minus,
    Plus,
}

impl Epsilon {
    pub fn value(self) -> i8 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    /// `(1 - ε)/2`: 0 for `+1`, 1 for `-1`.
    pub fn twist(self) -> usize {
        match self {
            Epsilon::Plus => 0,
            Epsilon::Minus => 1,
        }
    }
}

impl From<Epsilon> for i8 {
    fn from(e: Epsilon) -> i8 {
        e.value()
    }
}

impl TryFrom<i8> for Epsilon {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Epsilon::Plus),
            -1 => Ok(Epsilon::Minus),
            other => Err(format!("epsilon must be +1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
        })
    }
}

/// An `O(n)` parameter `(a₁, …, a_k, 0, …, 0; ε)` for the pair `(O(n), Sp(2p))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedWeight {
    a: Vec<i64>,
    epsilon: Epsilon,
    n: u32,
    p: u32,
}

impl SignedWeight {
    pub fn new(a: Vec<i64>, epsilon: Epsilon, n: u32, p: u32) -> Result<Self> {
        check_positive("n", n)?;
        check_positive("p", p)?;
        if a.iter().any(|&x| x <= 0) || !is_weakly_decreasing(&a) {
            return Err(Error::InvalidParameter(format!(
                "a = {} must be weakly decreasing with positive entries",
                list(&a)
            )));
        }
        let s = SignedWeight { a, epsilon, n, p };
        s.validate()?;
        Ok(s)
    }

    pub fn from_padded(a: &[i64], epsilon: Epsilon, n: u32, p: u32) -> Result<Self> {
        Self::new(a.iter().copied().filter(|&x| x != 0).collect(), epsilon, n, p)
    }

    /// Checks `k ≤ ⌊n/2⌋` and `k + ((1-ε)/2)(n - 2k) ≤ p`.
    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        let half = (self.n / 2) as usize;
        if k > half {
            return Err(Error::Constraint {
                inequality: "k <= floor(n/2)".into(),
                detail: format!("k = {k}, n = {}", self.n),
            });
        }
        let used = k + self.middle_len();
        if used > self.p as usize {
            return Err(Error::Constraint {
                inequality: "k + (1-eps)/2 (n-2k) <= p".into(),
                detail: format!("lhs = {used}, p = {}", self.p),
            });
        }
        Ok(())
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Length of the `n/2 + 1` block, `((1-ε)/2)(n - 2k)`.
    pub fn middle_len(&self) -> usize {
        self.epsilon.twist() * (self.n as usize - 2 * self.k())
    }
}

impl fmt::Display for SignedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} eps={}", list(&self.a), self.epsilon)
    }
}

/// Lowest weight `τ′` of the `gl(m+n)`-module attached to `σ`.
///
/// `(a + p/2, p/2, …, p/2) ⊕ (-p/2, …, -p/2, b - p/2)` with blocks of length
/// `m` and `n`.
pub fn theta_u_lowest(sigma: &UnitarySigma) -> Result<Weight> {
    sigma.validate()?;
    let half_p = q_half(sigma.p as i64);
    let (m, n) = (sigma.m as usize, sigma.n as usize);
    let mut coords = Vec::with_capacity(m + n);
    coords.extend(sigma.a.iter().map(|&x| q_int(x) + &half_p));
    coords.extend(std::iter::repeat_n(half_p.clone(), m - sigma.k()));
    coords.extend(std::iter::repeat_n(-&half_p, n - sigma.l()));
    coords.extend(sigma.b.iter().map(|&x| q_int(x) - &half_p));
    Ok(Weight::new(coords))
}

/// Lowest weight `τ′` of the `sp(2p)`-module attached to `σ`.
pub fn theta_o_lowest(sigma: &SignedWeight) -> Result<Weight> {
    sigma.validate()?;
    let half_n = q_half(sigma.n as i64);
    let mid = sigma.middle_len();
    let tail = sigma.p as usize - sigma.k() - mid;
    let mut coords = Vec::with_capacity(sigma.p as usize);
    coords.extend(sigma.a.iter().map(|&x| q_int(x) + &half_n));
    coords.extend(std::iter::repeat_n(&half_n + q_int(1), mid));
    coords.extend(std::iter::repeat_n(half_n, tail));
    Ok(Weight::new(coords))
}

/// Highest weight on `U(n,m)` from a lowest weight on `U(m,n)`: the `m`-block
/// and the `n`-block trade places.
pub fn to_highest_gl(lowest: &Weight, m: u32, n: u32) -> Result<Weight> {
    lowest.expect_len((m + n) as usize)?;
    let (first, second) = lowest.split_blocks(m as usize);
    Ok(second.concat(&first))
}

/// Highest weight on `Sp(2p)` from a lowest weight: negate and reverse.
pub fn to_highest_sp(lowest: &Weight) -> Weight {
    lowest.negate_reverse()
}

/// Weakly decreasing sequences with entries in `1..=max_entry` and lengths
/// `0..=max_len`.
pub fn bounded_partitions(max_len: usize, max_entry: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, cap: i64, max_len: usize, out: &mut Vec<Vec<i64>>) {
        out.push(prefix.clone());
        if prefix.len() == max_len {
            return;
        }
        for x in 1..=cap {
            prefix.push(x);
            extend(prefix, x, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_entry.max(0), max_len, &mut out);
    out
}

fn negative_parts(parts: &[i64]) -> Vec<i64> {
    parts.iter().rev().map(|x| -x).collect()
}

/// All strict parameters with `|a_i|, |b_j| ≤ bound`, ordered by `(k, l, a, b)`.
pub fn enumerate_sigma_u(p: u32, m: u32, n: u32, bound: u32) -> Vec<UnitarySigma> {
    if p == 0 || m == 0 || n == 0 {
        return Vec::new();
    }
    let pu = p as usize;
    let a_parts = bounded_partitions((m as usize).min(pu), bound as i64);
    let b_parts = bounded_partitions((n as usize).min(pu), bound as i64);
    let mut out: Vec<UnitarySigma> = a_parts
        .iter()
        .flat_map(|a| {
            b_parts
                .iter()
                .filter(move |b| a.len() + b.len() <= pu)
                .map(move |b| UnitarySigma {
                    a: a.clone(),
                    b: negative_parts(b),
                    p,
                    m,
                    n,
                    relaxed: false,
                })
        })
        .collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out
}

/// All parameters with `a_i ≤ bound` and either sign, ordered by `(ε, k, a)`
/// with `ε = -1` first.
pub fn enumerate_sigma_o(n: u32, p: u32, bound: u32) -> Vec<SignedWeight> {
    if n == 0 || p == 0 {
        return Vec::new();
    }
    let parts = bounded_partitions((n / 2) as usize, bound as i64);
    let mut out = Vec::new();
    for epsilon in [Epsilon::Minus, Epsilon::Plus] {
        for a in &parts {
            let s = SignedWeight {
                a: a.clone(),
                epsilon,
                n,
                p,
            };
            if s.validate().is_ok() {
                out.push(s);
            }
        }
    }
    out.sort_by(|x, y| match x.epsilon.cmp(&y.epsilon) {
        Ordering::Equal => (x.k(), &x.a).cmp(&(y.k(), &y.a)),
        o => o,
    });
    out
}
