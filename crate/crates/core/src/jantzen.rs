//! Irreducibility of `N(λ) = U(g) ⊗_{U(q)} F_λ`.
//!
//! For every `α ∈ Δ_n⁺` with `(λ+ρ)_α ∈ ℤ_{>0}` the check looks for a rescue
//! root `γ ∈ Δ_n` (either sign) with `(λ+ρ)_γ = 0` and `s_α(γ) ∈ Δ_c`. If all
//! such `α` are rescued the module is irreducible. An unrescued `α` proves
//! reducibility only in type A; in type C the verdict is `Unknown`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rootsys::{format_root, pairing, reflect_int, RootSystem};
use crate::weight::{format_q, is_positive_integer, q_serde, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Irreducible,
    Reducible,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Irreducible => "Irreducible",
            Status::Reducible => "Reducible",
            Status::Unknown => "Unknown",
        })
    }
}

/// A non-compact positive root with a positive integral pairing, and the
/// rescue root found for it, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub alpha: Vec<i64>,
    #[serde(with = "q_serde")]
    pub value: Q,
    pub rescue: Option<Vec<i64>>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} value={}", format_root(&self.alpha), format_q(&self.value))?;
        match &self.rescue {
            Some(g) => write!(f, " rescued by gamma={}", format_root(g)),
            None => f.write_str(" unrescued"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub alpha: Vec<i64>,
    #[serde(with = "q_serde")]
    pub value: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    /// One record per `α ∈ Δ_n⁺` with `(λ+ρ)_α ∈ ℤ_{>0}`.
    pub witnesses: Vec<Witness>,
    /// `(λ+ρ)_α` for every `α ∈ Δ_n⁺`, in root order.
    pub pairings: Vec<PairingEntry>,
}

impl Verdict {
    pub fn first_unrescued(&self) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.rescue.is_none())
    }

    pub fn worst_pairing(&self) -> Option<&Q> {
        self.pairings.iter().map(|e| &e.value).max()
    }
}

pub fn check_irreducible(rs: &RootSystem, lambda: &Weight) -> Result<Verdict> {
    lambda.expect_len(rs.rank())?;
    let shifted = lambda.checked_add(rs.rho())?;

    let noncompact: Vec<(&[i64], Q)> = rs
        .noncompact_roots()
        .map(|r| Ok((r.coords(), pairing(&shifted, r.coords())?)))
        .collect::<Result<_>>()?;

    let mut pairings = Vec::new();
    let mut witnesses = Vec::new();
    for alpha in rs.positive_noncompact_roots() {
        let value = pairing(&shifted, alpha.coords())?;
        if is_positive_integer(&value) {
            let mut rescue = None;
            for (gamma, g_val) in &noncompact {
                if !g_val.is_zero() {
                    continue;
                }
                if let Some(img) = reflect_int(alpha.coords(), gamma)? {
                    if rs.is_compact_root(&img) {
                        rescue = Some(gamma.to_vec());
                        break;
                    }
                }
            }
            witnesses.push(Witness {
                alpha: alpha.coords().to_vec(),
                value: value.clone(),
                rescue,
            });
        }
        pairings.push(PairingEntry {
            alpha: alpha.coords().to_vec(),
            value,
        });
    }

    let status = if witnesses.iter().all(|w| w.rescue.is_some()) {
        Status::Irreducible
    } else if rs.kind().is_type_a() {
        Status::Reducible
    } else {
        Status::Unknown
    };
    Ok(Verdict {
        status,
        witnesses,
        pairings,
    })
}

/// True iff `(λ)_α ≥ 0` for every positive compact root `α`.
pub fn dominance_check(rs: &RootSystem, lambda: &Weight) -> Result<bool> {
    lambda.expect_len(rs.rank())?;
    for alpha in rs.positive_compact_roots() {
        if pairing(lambda, alpha.coords())?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-checks a witness from scratch: `α ∈ Δ_n⁺`, the recorded value, and for a
/// rescue `γ ∈ Δ_n` with `(λ+ρ)_γ = 0` and `s_α(γ) ∈ Δ_c`.
pub fn verify_witness(rs: &RootSystem, lambda: &Weight, w: &Witness) -> bool {
    let Ok(shifted) = lambda.checked_add(rs.rho()) else {
        return false;
    };
    let Some(alpha) = rs.root(&w.alpha) else {
        return false;
    };
    if !alpha.is_positive() || alpha.is_compact() {
        return false;
    }
    if pairing(&shifted, &w.alpha).ok().as_ref() != Some(&w.value) || !is_positive_integer(&w.value) {
        return false;
    }
    match &w.rescue {
        None => true,
        Some(gamma) => {
            let in_dn = rs.root(gamma).is_some_and(|g| !g.is_compact());
            let zero = pairing(&shifted, gamma).is_ok_and(|v| v.is_zero());
            let image_compact = matches!(
                reflect_int(&w.alpha, gamma),
                Ok(Some(img)) if rs.is_compact_root(&img)
            );
            in_dn && zero && image_compact
        }
    }
}
