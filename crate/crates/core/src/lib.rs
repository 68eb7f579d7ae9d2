//! Exact enumerative combinatorics around standard Young tableaux.
//!
//! The crate computes hook-constrained SYT sums `S(k,l;n)`, the Motzkin-sums
//! function `a(n)`, Young's-rule character decompositions, and hump statistics
//! on Dyck and Motzkin paths, all in arbitrary-precision integer arithmetic.
//! Every closed form ships with an independent direct (enumerative)
//! counterpart, and the [`harness`] module cross-checks them over ranges.

pub mod arith;
pub mod characters;
pub mod harness;
pub mod hook_sums;
pub mod motzkin;
pub mod partition;
pub mod paths;
pub mod report;
pub mod tableaux;

pub use num_bigint::BigUint;

pub use characters::CharacterSum;
pub use partition::{HookBound, Partition};
pub use paths::{LatticePath, PathKind, Step};
pub use report::VerificationReport;

use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing after trailing zeros are dropped: {0:?}")]
    NotWeaklyDecreasing(Vec<u64>),
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("enumeration of size {size} exceeds cap {cap}")]
    CapExceeded { size: u64, cap: u64 },
    #[error("no closed strip formula for k = {0} (known only for k in 2..=5)")]
    UnsupportedStrip(u64),
    #[error("expected exact division: {0}")]
    Indivisible(String),
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("invalid range: lo {lo} > hi {hi}")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("invalid partition syntax: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
