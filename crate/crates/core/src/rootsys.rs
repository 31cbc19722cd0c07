//! Root data for `gl(n+m)` relative to `U(n) x U(m)` and for `sp(2p)` relative
//! to `U(p)`.
//!
//! Roots are enumerated eagerly and indexed by coordinates. Positivity follows
//! the standard Borel for which the roots of `p+` are positive: `e_i - e_j` is
//! positive iff `i < j`, and in type C every `e_i + e_j` and `2e_i` is positive.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{q_frac, q_int, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SystemKind {
    /// `gl(n+m)` with compact part `gl(n) x gl(m)`; first block has `n` indices.
    Gl { n: u32, m: u32 },
    /// `sp(2p)` with compact part `gl(p)`.
    Sp { p: u32 },
}

impl SystemKind {
    pub fn rank(&self) -> usize {
        match *self {
            SystemKind::Gl { n, m } => (n + m) as usize,
            SystemKind::Sp { p } => p as usize,
        }
    }

    /// Type A systems are the only ones where the irreducibility criterion is
    /// also necessary.
    pub fn is_type_a(&self) -> bool {
        matches!(self, SystemKind::Gl { .. })
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemKind::Gl { n, m } => write!(f, "GL({n},{m})"),
            SystemKind::Sp { p } => write!(f, "SP({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    coords: Vec<i64>,
    is_positive: bool,
    is_compact: bool,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_positive(&self) -> bool {
        self.is_positive
    }

    pub fn is_compact(&self) -> bool {
        self.is_compact
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_root(&self.coords))
    }
}

/// Writes an integer vector in `e_i` notation, e.g. `e1-e4`, `e1+e2`, `2e3`.
pub fn format_root(coords: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = c.unsigned_abs();
        if mag == 1 {
            out.push_str(&format!("{sign}e{}", i + 1));
        } else {
            out.push_str(&format!("{sign}{mag}e{}", i + 1));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClass {
    pub is_positive: bool,
    pub is_compact: bool,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: SystemKind,
    roots: Vec<Root>,
    rho: Weight,
    index: HashMap<Vec<i64>, usize>,
}

fn unit_combo(rank: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; rank];
    for &(i, c) in terms {
        v[i] += c;
    }
    v
}

impl RootSystem {
    /// The system of `gl(n+m)` for `U(n,m)`, indices `1..n` then `n+1..n+m`.
    pub fn gl(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter(format!(
                "GL(n,m) needs n, m >= 1 (got n={n}, m={m})"
            )));
        }
        let rank = (n + m) as usize;
        let block = |i: usize| i < n as usize;
        let mut roots = Vec::with_capacity(rank * (rank - 1));
        for i in 0..rank {
            for j in 0..rank {
                if i != j {
                    roots.push(Root {
                        coords: unit_combo(rank, &[(i, 1), (j, -1)]),
                        is_positive: i < j,
                        is_compact: block(i) == block(j),
                    });
                }
            }
        }
        Ok(Self::assemble(SystemKind::Gl { n, m }, roots))
    }

    pub fn sp(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParameter("SP(p) needs p >= 1".into()));
        }
        let rank = p as usize;
        let mut roots = Vec::with_capacity(2 * rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                if i != j {
                    roots.push(Root {
                        coords: unit_combo(rank, &[(i, 1), (j, -1)]),
                        is_positive: i < j,
                        is_compact: true,
                    });
                }
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                for sign in [1, -1] {
                    roots.push(Root {
                        coords: unit_combo(rank, &[(i, sign), (j, sign)]),
                        is_positive: sign > 0,
                        is_compact: false,
                    });
                }
            }
        }
        for i in 0..rank {
            for sign in [1, -1] {
                roots.push(Root {
                    coords: unit_combo(rank, &[(i, 2 * sign)]),
                    is_positive: sign > 0,
                    is_compact: false,
                });
            }
        }
        Ok(Self::assemble(SystemKind::Sp { p }, roots))
    }

    pub fn build(kind: SystemKind) -> Result<Self> {
        match kind {
            SystemKind::Gl { n, m } => Self::gl(n, m),
            SystemKind::Sp { p } => Self::sp(p),
        }
    }

    fn assemble(kind: SystemKind, roots: Vec<Root>) -> Self {
        let rank = kind.rank();
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();
        // rho = half the sum of the positive roots
        let mut sum = vec![0i64; rank];
        for r in roots.iter().filter(|r| r.is_positive) {
            for (s, c) in sum.iter_mut().zip(&r.coords) {
                *s += c;
            }
        }
        let rho = Weight::new(sum.into_iter().map(|s| q_frac(s, 2)).collect());
        RootSystem {
            kind,
            roots,
            rho,
            index,
        }
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive)
    }

    pub fn compact_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_compact)
    }

    /// `Δ_n`, both signs.
    pub fn noncompact_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| !r.is_compact)
    }

    /// `Δ_n⁺`.
    pub fn positive_noncompact_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive && !r.is_compact)
    }

    pub fn positive_compact_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive && r.is_compact)
    }

    /// Simple roots for the chosen positivity: `e_i - e_{i+1}`, plus `2e_p` in type C.
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        let rank = self.rank();
        let mut out: Vec<Vec<i64>> = (0..rank.saturating_sub(1))
            .map(|i| unit_combo(rank, &[(i, 1), (i + 1, -1)]))
            .collect();
        if let SystemKind::Sp { .. } = self.kind {
            out.push(unit_combo(rank, &[(rank - 1, 2)]));
        }
        out
    }

    pub fn root(&self, coords: &[i64]) -> Option<&Root> {
        self.index.get(coords).map(|&k| &self.roots[k])
    }

    /// Positivity and compactness of `coords`, or `Ok(None)` if it is not a root.
    pub fn classify(&self, coords: &[i64]) -> Result<Option<RootClass>> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        Ok(self.root(coords).map(|r| RootClass {
            is_positive: r.is_positive,
            is_compact: r.is_compact,
        }))
    }

    pub fn is_compact_root(&self, coords: &[i64]) -> bool {
        self.root(coords).is_some_and(|r| r.is_compact)
    }
}

/// `(λ)_α = 2<λ,α>/<α,α>` with the standard dot product.
pub fn pairing(lambda: &Weight, alpha: &[i64]) -> Result<Q> {
    let norm: i64 = alpha.iter().map(|c| c * c).sum();
    if norm == 0 {
        return Err(Error::ZeroRoot);
    }
    Ok(lambda.dot_int(alpha)? * q_int(2) / q_int(norm))
}

/// `s_α(γ) = γ - (γ)_α α`.
pub fn reflect(alpha: &[i64], gamma: &[i64]) -> Result<Weight> {
    if alpha.len() != gamma.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.len(),
            found: gamma.len(),
        });
    }
    let g = Weight::from_ints(gamma);
    let c = pairing(&g, alpha)?;
    Ok(&g - &Weight::from_ints(alpha).scale(&c))
}

/// Integer form of [`reflect`]; `None` if the image is not integral.
pub fn reflect_int(alpha: &[i64], gamma: &[i64]) -> Result<Option<Vec<i64>>> {
    Ok(reflect(alpha, gamma)?.to_ints())
}

/// Reflection of an arbitrary rational weight.
pub fn reflect_weight(alpha: &[i64], lambda: &Weight) -> Result<Weight> {
    let c = pairing(lambda, alpha)?;
    if c.is_zero() {
        return Ok(lambda.clone());
    }
    Ok(lambda - &Weight::from_ints(alpha).scale(&c))
}
