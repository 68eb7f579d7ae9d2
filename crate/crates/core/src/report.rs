//! Verification reports shared by the identity harness and the
//! per-module checkers.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The scan stopped before covering the full range.
    Partial,
}

/// The witness for a failed check: the first index where the two sides
/// disagree, with both values rendered in full decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirstFailure {
    pub index: u64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of scanning one identity over an inclusive index range.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: [u64; 2],
    pub status: Status,
    pub first_failure: Option<FirstFailure>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<18} [{}, {}] {}",
            self.identity,
            self.range[0],
            self.range[1],
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Partial => "partial",
            }
        )?;
        if let Some(w) = &self.first_failure {
            write!(f, " (first failure at {}: lhs {} != rhs {})", w.index, w.lhs, w.rhs)?;
        }
        write!(f, " ({:.3}s)", self.elapsed.as_secs_f64())
    }
}
