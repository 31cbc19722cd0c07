//! Exact weight-level computations for the compact dual pairs
//! `(U(p), U(m,n))` and `(O(n), Sp(2p))`.
//!
//! * [`rootsys`]: roots, compactness, `ρ`, pairings and reflections for
//!   `gl(n+m)` and `sp(2p)`.
//! * [`theta`]: the correspondence weight maps and parameter enumeration.
//! * [`jantzen`]: the irreducibility decision for generalized Verma modules.
//! * [`survey`]: threshold sweeps, closed-form pairing tables and the
//!   counterexample search.
//! * [`graded`]: filtration dimension identities and Weyl dimensions.
//! * [`cli`]: the `howe` command-line driver.
//!
//! Runnable walkthroughs live in this crate's `examples/` directory.

pub mod cli;
pub mod error;
pub mod graded;
pub mod jantzen;
pub mod rootsys;
pub mod survey;
pub mod theta;
pub mod weight;

pub use error::{Error, Result};
pub use jantzen::{check_irreducible, dominance_check, Status, Verdict, Witness};
pub use rootsys::{pairing, reflect, Root, RootSystem, SystemKind};
pub use theta::{Epsilon, SignedWeight, UnitarySigma};
pub use weight::{Weight, Q};
