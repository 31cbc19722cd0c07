//! Dimension counts for the filtered modules `V_E`, `V_E⁺`, `V` and `V_E ⊗ V_F`,
//! and the Weyl dimension formula for the compact groups involved.
//!
//! Only dimensions of filtration pieces are computed; nothing here builds the
//! modules themselves.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{format_q, q_frac, q_int, Weight, Q};

/// `dim S(ℂ^d)[n] = C(d+n-1, n)`.
pub fn sym_hilbert(d: u64, n: u64) -> Result<BigUint> {
    if d == 0 {
        return if n == 0 {
            Ok(BigUint::one())
        } else {
            Err(Error::InvalidParameter(format!(
                "S(C^0) has no piece of degree {n}"
            )))
        };
    }
    Ok(binomial(d + n - 1, n))
}

pub fn binomial(top: u64, k: u64) -> BigUint {
    if k > top {
        return BigUint::zero();
    }
    let k = k.min(top - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (top - i) is divisible by (i + 1) at every step
        acc = acc * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    acc
}

/// Dimension of `p = {[[0, A], [Aᵀ, 0]]}` inside `o(m,n)`: one free entry per
/// position of `A`.
pub fn dim_p_orthogonal(m: u64, n: u64) -> u64 {
    (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).count() as u64
}

/// Dimension of `p⁺ = {[[0, A], [0, 0]]}` inside `gl(m+n)`, `A ∈ M_{m,n}`.
pub fn dim_p_plus_unitary(m: u64, n: u64) -> u64 {
    m * n
}

/// Dimension of `p^±` inside `sp(2p)`: symmetric `p × p` matrices.
pub fn dim_p_pm_symplectic(p: u64) -> u64 {
    (0..p).map(|i| p - i).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRow {
    pub degree: u64,
    /// Dimension via the first construction (`V_E`, resp. `V`).
    pub left: String,
    /// Dimension via the second construction (`V_E⁺`, resp. `V_E ⊗ V_F`).
    pub right: String,
    /// A third count where one exists (the Cauchy route for `sp`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub third: Option<String>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum GradedParams {
    O { m: u64, n: u64, dim_e: u64, degree: u64 },
    Sp { p: u64, dim_e: u64, dim_f: u64, degree: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCheck {
    pub params: GradedParams,
    pub equal: bool,
    pub rows: Vec<GradedRow>,
}

/// Compares `dim (V_E)_t = dim E · Σ_{r≤t} dim S(p)[r]` with
/// `dim (V_E⁺)_t = dim E · Σ_{r≤t} dim S(p⁺)[r]` for `t ≤ max_degree`.
pub fn check_graded_dims_o(m: u64, n: u64, dim_e: u64, max_degree: u64) -> Result<GradedCheck> {
    if m == 0 || n == 0 || dim_e == 0 {
        return Err(Error::InvalidParameter("m, n, dimE must be >= 1".into()));
    }
    let d_p = dim_p_orthogonal(m, n);
    let d_plus = dim_p_plus_unitary(m, n);
    let e = BigUint::from(dim_e);
    let mut left = BigUint::zero();
    let mut right = BigUint::zero();
    let mut rows = Vec::new();
    for t in 0..=max_degree {
        left += &e * sym_hilbert(d_p, t)?;
        right += &e * sym_hilbert(d_plus, t)?;
        rows.push(GradedRow {
            degree: t,
            left: left.to_string(),
            right: right.to_string(),
            third: None,
            equal: left == right,
        });
    }
    Ok(GradedCheck {
        params: GradedParams::O {
            m,
            n,
            dim_e,
            degree: max_degree,
        },
        equal: rows.iter().all(|r| r.equal),
        rows,
    })
}

/// Compares, for `t ≤ max_degree`,
/// `dim (V_E ⊗ V_F)_t = dim E dim F Σ_{r+s≤t} dim S(p⁻)[r] dim S(p⁺)[s]` with
/// `dim V_t = dim E dim F Σ_{i≤t} dim S(p′)[i]`, `dim p′ = 2 dim p^±`.
pub fn check_graded_dims_sp(p: u64, dim_e: u64, dim_f: u64, max_degree: u64) -> Result<GradedCheck> {
    if p == 0 || dim_e == 0 || dim_f == 0 {
        return Err(Error::InvalidParameter("p, dimE, dimF must be >= 1".into()));
    }
    let d = dim_p_pm_symplectic(p);
    let ef = BigUint::from(dim_e) * BigUint::from(dim_f);
    let minus: Vec<BigUint> = (0..=max_degree).map(|r| sym_hilbert(d, r)).collect::<Result<_>>()?;
    let plus = minus.clone();

    let mut tensor = BigUint::zero();
    let mut induced = BigUint::zero();
    let mut rows = Vec::new();
    for t in 0..=max_degree {
        let graded_piece: BigUint = (0..=t)
            .map(|r| &minus[r as usize] * &plus[(t - r) as usize])
            .sum();
        tensor += &ef * &graded_piece;
        induced += &ef * sym_hilbert(2 * d, t)?;
        // M_t ≅ Σ_{r+s≤t} S(p⁻)[r] ⊗ S(p⁺)[s], counted directly
        let m_t: BigUint = (0..=t)
            .flat_map(|r| (0..=t - r).map(move |s| (r, s)))
            .map(|(r, s)| &minus[r as usize] * &plus[s as usize])
            .sum();
        let v_t = &ef * m_t;
        let equal = tensor == induced && v_t == tensor;
        rows.push(GradedRow {
            degree: t,
            left: v_t.to_string(),
            right: tensor.to_string(),
            third: Some(induced.to_string()),
            equal,
        });
    }
    Ok(GradedCheck {
        params: GradedParams::Sp {
            p,
            dim_e,
            dim_f,
            degree: max_degree,
        },
        equal: rows.iter().all(|r| r.equal),
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompactGroup {
    /// `U(q)`, `q` = length of the weight.
    Unitary,
    /// `O(n)` with parameter `(a₁, …, a_k, 0, …; ε)`; the weight carries the
    /// `⌊n/2⌋` leading entries.
    Orthogonal { n: u32 },
}

fn check_dominant(lambda: &Weight) -> Result<()> {
    if !lambda.is_weakly_decreasing() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

fn into_positive_integer(q: Q, lambda: &Weight) -> Result<BigUint> {
    if !q.is_integer() || q <= Q::zero() {
        return Err(Error::Invariant(format!(
            "Weyl product {} for {lambda} is not a positive integer",
            format_q(&q)
        )));
    }
    Ok(q.to_integer().to_biguint().expect("positive"))
}

/// Weyl dimension formula.
///
/// For `U(q)`: `∏_{i<j} (λ_i - λ_j + j - i)/(j - i)`; half-integral weights are
/// accepted when all differences are integers.
///
/// For `O(n)` the weight is the `a`-vector padded to `⌊n/2⌋` entries; the
/// result is the dimension of the corresponding `SO(n)` module, doubled when
/// `n` is even and the last entry is nonzero (the `O(n)`-module then restricts
/// to two `SO(n)` constituents). The sign `ε` does not affect the dimension.
pub fn weyl_dim(group: CompactGroup, lambda: &Weight) -> Result<BigUint> {
    check_dominant(lambda)?;
    match group {
        CompactGroup::Unitary => {
            let c = lambda.coords();
            let mut prod = q_int(1);
            for i in 0..c.len() {
                for j in (i + 1)..c.len() {
                    let gap = q_int((j - i) as i64);
                    let diff = &c[i] - &c[j];
                    if !diff.is_integer() {
                        return Err(Error::InvalidParameter(format!(
                            "weight {lambda} has non-integral differences"
                        )));
                    }
                    prod *= (diff + &gap) / gap;
                }
            }
            into_positive_integer(prod, lambda)
        }
        CompactGroup::Orthogonal { n } => {
            let r = (n / 2) as usize;
            lambda.expect_len(r)?;
            let c = lambda.coords();
            if c.iter().any(|x| !x.is_integer() || *x < Q::zero()) {
                return Err(Error::NotDominant(lambda.to_string()));
            }
            let odd = n % 2 == 1;
            // ρ for B_r is (r - i + 1/2), for D_r it is (r - i), i = 1..r
            let rho: Vec<Q> = (0..r)
                .map(|i| {
                    let base = (r - 1 - i) as i64;
                    if odd {
                        q_frac(2 * base + 1, 2)
                    } else {
                        q_int(base)
                    }
                })
                .collect();
            let l: Vec<Q> = c.iter().zip(&rho).map(|(x, y)| x + y).collect();
            let mut prod = q_int(1);
            for i in 0..r {
                for j in (i + 1)..r {
                    prod *= (&l[i] * &l[i] - &l[j] * &l[j]) / (&rho[i] * &rho[i] - &rho[j] * &rho[j]);
                }
                if odd {
                    prod *= &l[i] / &rho[i];
                }
            }
            let so_dim = into_positive_integer(prod, lambda)?;
            let doubled = !odd && r > 0 && !c[r - 1].is_zero();
            Ok(if doubled { so_dim * 2u32 } else { so_dim })
        }
    }
}
