use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector is not a root")]
    ZeroRoot,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A correspondence constraint failed; `inequality` names it, e.g. `k + l <= p`.
    #[error("constraint violated: {inequality} ({detail})")]
    Constraint { inequality: String, detail: String },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("no case branch covers {root} for n={n}, p={p}, k={k}, epsilon={epsilon}")]
    CaseTableGap {
        root: String,
        n: u32,
        p: u32,
        k: usize,
        epsilon: i8,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
