//! Bulk runs of the irreducibility check over correspondence parameters.
//!
//! Two enumeration regimes are kept apart: threshold sweeps use only
//! constraint-respecting parameters from [`crate::theta`], while the
//! counterexample search walks a relaxed zero-padded grid. The bound `B` is a
//! cap on each entry `|a_i|`, `|b_j|`, not on a norm.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jantzen::{check_irreducible, dominance_check, Status, Verdict, Witness};
use crate::rootsys::{format_root, pairing, RootSystem};
use crate::theta::{
    bounded_partitions, enumerate_sigma_o, enumerate_sigma_u, theta_o_lowest, theta_u_lowest,
    to_highest_gl, to_highest_sp, Epsilon, SignedWeight, UnitarySigma,
};
use crate::weight::{format_q, q_frac, q_int, q_serde, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    /// `(U(p), U(m,n))`
    U,
    /// `(O(n), Sp(2p))`
    Sp,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::U => "u",
            PairKind::Sp => "sp",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EpsFilter {
    #[default]
    Both,
    Plus,
    Minus,
}

impl EpsFilter {
    pub fn admits(self, e: Epsilon) -> bool {
        match self {
            EpsFilter::Both => true,
            EpsFilter::Plus => e == Epsilon::Plus,
            EpsFilter::Minus => e == Epsilon::Minus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    pub pair: PairKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    pub n: u32,
    pub p: u32,
    pub bound: u32,
    /// Always `max-entry`: `B` caps every `|a_i|` and `|b_j|`.
    pub bound_kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps: Option<EpsFilter>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SigmaRecord {
    Unitary { a: Vec<i64>, b: Vec<i64> },
    Orthogonal { a: Vec<i64>, epsilon: Epsilon },
}

impl From<&UnitarySigma> for SigmaRecord {
    fn from(s: &UnitarySigma) -> Self {
        SigmaRecord::Unitary {
            a: s.a().to_vec(),
            b: s.b().to_vec(),
        }
    }
}

impl From<&SignedWeight> for SigmaRecord {
    fn from(s: &SignedWeight) -> Self {
        SigmaRecord::Orthogonal {
            a: s.a().to_vec(),
            epsilon: s.epsilon(),
        }
    }
}

fn int_list(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for SigmaRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaRecord::Unitary { a, b } => write!(f, "a=({}) b=({})", int_list(a), int_list(b)),
            SigmaRecord::Orthogonal { a, epsilon } => {
                write!(f, "a=({}) eps={epsilon}", int_list(a))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub sigma: SigmaRecord,
    pub tau: Weight,
    pub status: Status,
    /// Largest `(τ+ρ)_α` over `Δ_n⁺`.
    #[serde(with = "q_serde")]
    pub worst_pairing: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub sigma: SigmaRecord,
    pub tau: Weight,
    pub alpha: Vec<i64>,
    #[serde(with = "q_serde")]
    pub value: Q,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Histogram {
    pub irreducible: usize,
    pub reducible: usize,
    pub unknown: usize,
}

impl Histogram {
    fn record(&mut self, s: Status) {
        match s {
            Status::Irreducible => self.irreducible += 1,
            Status::Reducible => self.reducible += 1,
            Status::Unknown => self.unknown += 1,
        }
    }

    pub fn is_pure_irreducible(&self) -> bool {
        self.reducible == 0 && self.unknown == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub params: SweepParams,
    pub total: usize,
    pub histogram: Histogram,
    pub all_irreducible: bool,
    /// Strictly positive `(τ+ρ)_{2e_i}` values seen (type C only).
    pub positive_long_pairings: usize,
    /// Those among them that are integers.
    pub integral_positive_long_pairings: usize,
    pub counterexamples: Vec<Counterexample>,
    pub rows: Vec<SweepRow>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

impl SweepReport {
    /// `yes` when positive long-root pairings occurred and none was integral.
    pub fn nonintegral_rescues(&self) -> &'static str {
        if self.integral_positive_long_pairings > 0 {
            "no"
        } else if self.positive_long_pairings > 0 {
            "yes"
        } else {
            "not needed"
        }
    }

    pub fn summary_line(&self) -> String {
        match self.params.pair {
            PairKind::U => format!("all irreducible: {}", self.all_irreducible),
            PairKind::Sp => format!(
                "all irreducible: {}; non-integral rescues: {}",
                self.all_irreducible,
                self.nonintegral_rescues()
            ),
        }
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        match self.params.pair {
            PairKind::U => {
                let m = self
                    .params
                    .m
                    .ok_or_else(|| Error::Invariant("U report without m".into()))?;
                RootSystem::gl(self.params.n, m)
            }
            PairKind::Sp => RootSystem::sp(self.params.p),
        }
    }

    /// Re-checks the report: histogram totals, the counterexample/histogram
    /// agreement, and each counterexample under a fresh irreducibility check.
    pub fn check_invariants(&self) -> Result<()> {
        let h = &self.histogram;
        if h.irreducible + h.reducible + h.unknown != self.total || self.rows.len() != self.total {
            return Err(Error::Invariant("histogram does not sum to total".into()));
        }
        if self.counterexamples.is_empty() != h.is_pure_irreducible() {
            return Err(Error::Invariant(
                "counterexamples present iff Reducible/Unknown verdicts present".into(),
            ));
        }
        if self.all_irreducible != h.is_pure_irreducible() {
            return Err(Error::Invariant("all_irreducible disagrees with histogram".into()));
        }
        let rs = self.root_system()?;
        for c in &self.counterexamples {
            let v = check_irreducible(&rs, &c.tau)?;
            let w = v.first_unrescued();
            if v.status == Status::Irreducible
                || w.map(|w| (&w.alpha, &w.value)) != Some((&c.alpha, &c.value))
            {
                return Err(Error::Invariant(format!(
                    "counterexample {} does not re-verify",
                    c.tau
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// One row per σ.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "pair", "m", "n", "p", "bound", "a", "b", "epsilon", "tau", "verdict", "worst_pairing",
        ])?;
        let pr = &self.params;
        for row in &self.rows {
            let (a, b, eps) = match &row.sigma {
                SigmaRecord::Unitary { a, b } => (int_list(a), int_list(b), String::new()),
                SigmaRecord::Orthogonal { a, epsilon } => (int_list(a), String::new(), epsilon.to_string()),
            };
            w.write_record([
                pr.pair.to_string(),
                pr.m.map(|m| m.to_string()).unwrap_or_default(),
                pr.n.to_string(),
                pr.p.to_string(),
                pr.bound.to_string(),
                a,
                b,
                eps,
                row.tau.to_string(),
                row.status.to_string(),
                format_q(&row.worst_pairing),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

struct Evaluated {
    row: SweepRow,
    counterexample: Option<Counterexample>,
    positive_long: usize,
    integral_positive_long: usize,
}

fn is_long_root(alpha: &[i64]) -> bool {
    alpha.iter().filter(|&&c| c != 0).count() == 1
}

fn evaluate(rs: &RootSystem, sigma: SigmaRecord, tau: Weight) -> Result<Evaluated> {
    let verdict: Verdict = check_irreducible(rs, &tau)?;
    let worst = verdict.worst_pairing().cloned().unwrap_or_else(Q::zero);
    let long_positive: Vec<&Q> = verdict
        .pairings
        .iter()
        .filter(|e| is_long_root(&e.alpha) && e.value.is_positive())
        .map(|e| &e.value)
        .collect();
    let counterexample = verdict.first_unrescued().map(|w: &Witness| Counterexample {
        sigma: sigma.clone(),
        tau: tau.clone(),
        alpha: w.alpha.clone(),
        value: w.value.clone(),
    });
    Ok(Evaluated {
        positive_long: long_positive.len(),
        integral_positive_long: long_positive.iter().filter(|v| v.is_integer()).count(),
        row: SweepRow {
            sigma,
            tau,
            status: verdict.status,
            worst_pairing: worst,
        },
        counterexample,
    })
}

fn assemble(params: SweepParams, evaluated: Vec<Evaluated>, started: Instant) -> SweepReport {
    let mut histogram = Histogram::default();
    let mut rows = Vec::with_capacity(evaluated.len());
    let mut counterexamples = Vec::new();
    let (mut pos, mut pos_int) = (0, 0);
    for e in evaluated {
        histogram.record(e.row.status);
        pos += e.positive_long;
        pos_int += e.integral_positive_long;
        counterexamples.extend(e.counterexample);
        rows.push(e.row);
    }
    SweepReport {
        params,
        total: rows.len(),
        all_irreducible: histogram.is_pure_irreducible(),
        histogram,
        positive_long_pairings: pos,
        integral_positive_long_pairings: pos_int,
        counterexamples,
        rows,
        wall_time_ms: Some(started.elapsed().as_millis() as u64),
    }
}

/// Runs the check on `τ = to_highest_gl(θ(σ))` over `GL(n,m)` for every
/// admissible `σ` with entries bounded by `bound`.
pub fn sweep_u(m: u32, n: u32, p: u32, bound: u32) -> Result<SweepReport> {
    let started = Instant::now();
    if p == 0 {
        return Err(Error::InvalidParameter("p must be >= 1".into()));
    }
    let rs = RootSystem::gl(n, m)?;
    let sigmas = enumerate_sigma_u(p, m, n, bound);
    let evaluated = sigmas
        .par_iter()
        .map(|s| {
            let tau = to_highest_gl(&theta_u_lowest(s)?, m, n)?;
            evaluate(&rs, s.into(), tau)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = SweepParams {
        pair: PairKind::U,
        m: Some(m),
        n,
        p,
        bound,
        bound_kind: "max-entry".into(),
        eps: None,
    };
    Ok(assemble(params, evaluated, started))
}

/// Runs the check on `τ = to_highest_sp(θ(σ))` over `SP(p)`.
pub fn sweep_sp(n: u32, p: u32, bound: u32, eps: EpsFilter) -> Result<SweepReport> {
    let started = Instant::now();
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let rs = RootSystem::sp(p)?;
    let sigmas: Vec<SignedWeight> = enumerate_sigma_o(n, p, bound)
        .into_iter()
        .filter(|s| eps.admits(s.epsilon()))
        .collect();
    let evaluated = sigmas
        .par_iter()
        .map(|s| {
            let tau = to_highest_sp(&theta_o_lowest(s)?);
            evaluate(&rs, s.into(), tau)
        })
        .collect::<Result<Vec<_>>>()?;
    let params = SweepParams {
        pair: PairKind::Sp,
        m: None,
        n,
        p,
        bound,
        bound_kind: "max-entry".into(),
        eps: Some(eps),
    };
    Ok(assemble(params, evaluated, started))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormEntry {
    pub root: Vec<i64>,
    #[serde(with = "q_serde")]
    pub value: Q,
}

/// Piecewise closed forms for `(τ+ρ)_{2e_i}` (all `i`) followed by
/// `(τ+ρ)_{e_i+e_j}` (all `i < j`, lexicographic).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormTable {
    pub long: Vec<ClosedFormEntry>,
    pub sums: Vec<ClosedFormEntry>,
}

impl ClosedFormTable {
    pub fn entries(&self) -> impl Iterator<Item = &ClosedFormEntry> {
        self.long.iter().chain(&self.sums)
    }
}

fn long_root(p: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; p];
    v[i - 1] = 2;
    v
}

fn sum_root(p: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; p];
    v[i - 1] = 1;
    v[j - 1] = 1;
    v
}

/// Evaluates the case tables for `τ+ρ` paired with the non-compact positive
/// roots of `sp(2p)`, where `τ` is the highest weight attached to
/// `(a₁, …, a_k; ε)`.
pub fn closed_form_sp_pairings(n: u32, p: u32, k: usize, a: &[i64], eps: Epsilon) -> Result<ClosedFormTable> {
    if a.len() != k {
        return Err(Error::InvalidParameter(format!(
            "k = {k} but a has {} entries",
            a.len()
        )));
    }
    SignedWeight::new(a.to_vec(), eps, n, p)?;
    let (pi, ni, ki) = (p as i64, n as i64, k as i64);
    // a_{p+1-i}, 1-based
    let a_at = |i: i64| q_int(a[(pi - i) as usize]);
    let half_n = q_frac(ni, 2);
    let gap = |root: Vec<i64>| Error::CaseTableGap {
        root: format_root(&root),
        n,
        p,
        k,
        epsilon: eps.value(),
    };

    let mut long = Vec::with_capacity(p as usize);
    for i in 1..=pi {
        let value = match eps {
            Epsilon::Plus => {
                if 1 <= i && i <= pi - ki {
                    q_int(pi + 1 - i) - &half_n
                } else if pi - ki < i && i <= pi {
                    q_int(pi + 1 - i) - &half_n - a_at(i)
                } else {
                    return Err(gap(long_root(p as usize, i as usize)));
                }
            }
            Epsilon::Minus => {
                let (f, g) = (pi + ki - ni, pi - ki);
                if 1 <= i && i <= f {
                    q_int(pi + 1 - i) - &half_n
                } else if f < i && i <= g {
                    q_int(pi - i) - &half_n
                } else if g < i && i <= pi {
                    q_int(pi + 1 - i) - &half_n - a_at(i)
                } else {
                    return Err(gap(long_root(p as usize, i as usize)));
                }
            }
        };
        long.push(ClosedFormEntry {
            root: long_root(p as usize, i as usize),
            value,
        });
    }

    let mut sums = Vec::new();
    for i in 1..=pi {
        for j in (i + 1)..=pi {
            let base = 2 * pi - i - j - ni;
            let value = match eps {
                Epsilon::Plus => {
                    let g = pi - ki;
                    if i <= g && j <= g {
                        q_int(base + 2)
                    } else if 1 <= i && i <= g && g < j && j <= pi {
                        q_int(base + 2) - a_at(j)
                    } else if g < i && g < j {
                        q_int(base + 2) - a_at(i) - a_at(j)
                    } else {
                        return Err(gap(sum_root(p as usize, i as usize, j as usize)));
                    }
                }
                Epsilon::Minus => {
                    let (f, g) = (pi + ki - ni, pi - ki);
                    let first = |x: i64| 1 <= x && x <= f;
                    let middle = |x: i64| f < x && x <= g;
                    let last = |x: i64| g < x && x <= pi;
                    if first(i) && first(j) {
                        q_int(base + 2)
                    } else if middle(i) && middle(j) {
                        q_int(base)
                    } else if last(i) && last(j) {
                        q_int(base + 2) - a_at(i) - a_at(j)
                    } else if first(i) && middle(j) {
                        q_int(base + 1)
                    } else if middle(i) && last(j) {
                        q_int(base + 1) - a_at(j)
                    } else if first(i) && last(j) {
                        q_int(base + 2) - a_at(j)
                    } else {
                        return Err(gap(sum_root(p as usize, i as usize, j as usize)));
                    }
                }
            };
            sums.push(ClosedFormEntry {
                root: sum_root(p as usize, i as usize, j as usize),
                value,
            });
        }
    }
    Ok(ClosedFormTable { long, sums })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub sigma: SigmaRecord,
    pub root: Vec<i64>,
    /// `None` when the case table had no branch for this root.
    pub closed_form: Option<String>,
    pub generic: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub n: u32,
    pub p: u32,
    pub bound: u32,
    pub sigmas: usize,
    pub entries: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares [`closed_form_sp_pairings`] with pairings computed directly from
/// `to_highest_sp(theta_o_lowest(σ)) + ρ` for every enumerated `σ`.
pub fn crosscheck_closed_form(n: u32, p: u32, bound: u32) -> Result<CrosscheckReport> {
    crosscheck_closed_form_with(n, p, bound, |s| {
        closed_form_sp_pairings(s.n(), s.p(), s.k(), s.a(), s.epsilon())
    })
}

/// [`crosscheck_closed_form`] against an arbitrary table source.
pub fn crosscheck_closed_form_with<F>(n: u32, p: u32, bound: u32, table: F) -> Result<CrosscheckReport>
where
    F: Fn(&SignedWeight) -> Result<ClosedFormTable>,
{
    let rs = RootSystem::sp(p)?;
    let sigmas = enumerate_sigma_o(n, p, bound);
    let mut mismatches = Vec::new();
    let mut entries = 0;
    for s in &sigmas {
        let shifted = to_highest_sp(&theta_o_lowest(s)?).checked_add(rs.rho())?;
        let mut generic: Vec<(Vec<i64>, Q)> = Vec::new();
        for i in 1..=p as usize {
            let r = long_root(p as usize, i);
            generic.push((r.clone(), pairing(&shifted, &r)?));
        }
        for i in 1..=p as usize {
            for j in (i + 1)..=p as usize {
                let r = sum_root(p as usize, i, j);
                generic.push((r.clone(), pairing(&shifted, &r)?));
            }
        }
        entries += generic.len();
        match table(s) {
            Ok(t) => {
                let closed: Vec<&ClosedFormEntry> = t.entries().collect();
                for (root, g) in &generic {
                    let c = closed.iter().find(|e| &e.root == root);
                    if c.map(|e| &e.value) != Some(g) {
                        mismatches.push(Mismatch {
                            sigma: s.into(),
                            root: root.clone(),
                            closed_form: c.map(|e| format_q(&e.value)),
                            generic: format_q(g),
                        });
                    }
                }
            }
            Err(_) => {
                for (root, g) in &generic {
                    mismatches.push(Mismatch {
                        sigma: s.into(),
                        root: root.clone(),
                        closed_form: None,
                        generic: format_q(g),
                    });
                }
            }
        }
    }
    Ok(CrosscheckReport {
        n,
        p,
        bound,
        sigmas: sigmas.len(),
        entries,
        mismatches,
    })
}

/// A reducible `τ` from the relaxed grid with its unrescued root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleTau {
    pub tau: Weight,
    pub witness: Witness,
}

/// Searches the relaxed grid: `a` of length `m` in `[0, B]`, `b` of length `n`
/// in `[-B, 0]`, both weakly decreasing, zeros allowed and `k + l ≤ p` not
/// imposed. Returns every dominant `τ` whose verdict is Reducible, in grid
/// order (`a` outer, `b` inner).
pub fn find_counterexamples(m: u32, n: u32, p: u32, bound: u32) -> Result<Vec<ReducibleTau>> {
    let rs = RootSystem::gl(n, m)?;
    let pad = |mut v: Vec<i64>, len: usize| {
        v.resize(len, 0);
        v
    };
    let a_grid: Vec<Vec<i64>> = bounded_partitions(m as usize, bound as i64)
        .into_iter()
        .map(|v| pad(v, m as usize))
        .collect();
    let b_grid: Vec<Vec<i64>> = bounded_partitions(n as usize, bound as i64)
        .into_iter()
        .map(|v| pad(v, n as usize).into_iter().rev().map(|x| -x).collect())
        .collect();
    let mut pairs: Vec<(&Vec<i64>, &Vec<i64>)> = a_grid
        .iter()
        .flat_map(|a| b_grid.iter().map(move |b| (a, b)))
        .collect();
    pairs.sort();
    let found: Vec<Option<ReducibleTau>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let sigma = UnitarySigma::from_padded(a, b, p, m, n, true)?;
            let tau = to_highest_gl(&theta_u_lowest(&sigma)?, m, n)?;
            if !dominance_check(&rs, &tau)? {
                return Ok(None);
            }
            let v = check_irreducible(&rs, &tau)?;
            Ok(match (v.status, v.first_unrescued()) {
                (Status::Reducible, Some(w)) => Some(ReducibleTau {
                    tau,
                    witness: w.clone(),
                }),
                _ => None,
            })
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}
