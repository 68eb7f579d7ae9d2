//! Dyck and Motzkin lattice paths, hump statistics, and the
//! correspondences between hump totals and hook sums.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{binomial, binomial_pair_sum, exact_div};
use crate::hook_sums::{hook_sum_direct, strip_sum_closed};
use crate::partition::{HookBound, Partition};
use crate::report::{FirstFailure, Status, VerificationReport};
use crate::tableaux::syt_count;
use crate::{Error, Result};

/// Default length cap for Dyck path enumeration (C_14 = 2674440 paths).
pub const DEFAULT_DYCK_CAP: u64 = 14;
/// Default length cap for Motzkin path enumeration (M_16 = 853467 paths).
pub const DEFAULT_MOTZKIN_CAP: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Dyck,
    Motzkin,
}

/// A nonnegative lattice path: every prefix has at least as many up-steps
/// as down-steps and the totals balance. Dyck paths have no flat steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    kind: PathKind,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(kind: PathKind, steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for &s in &steps {
            match s {
                Step::Up => height += 1,
                Step::Down => height -= 1,
                Step::Flat => {
                    if kind == PathKind::Dyck {
                        return Err(Error::Parse("Dyck paths cannot contain flat steps".into()));
                    }
                }
            }
            if height < 0 {
                return Err(Error::Parse("path dips below the axis".into()));
            }
        }
        if height != 0 {
            return Err(Error::Parse("path does not return to the axis".into()));
        }
        Ok(LatticePath { kind, steps })
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of humps: maximal segments of an up-step, zero or more
    /// flat-steps, and a down-step. On Dyck paths this is the number of
    /// up-down peaks.
    pub fn count_humps(&self) -> u64 {
        let mut humps = 0;
        let mut pending_up = false;
        for &s in &self.steps {
            match s {
                Step::Up => pending_up = true,
                Step::Flat => {}
                Step::Down => {
                    if pending_up {
                        humps += 1;
                    }
                    pending_up = false;
                }
            }
        }
        humps
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
                Step::Flat => "F",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    /// Parses a string over {U,D,F}; the kind is Motzkin when any flat
    /// step occurs, Dyck otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for c in s.chars() {
            steps.push(match c {
                'U' => Step::Up,
                'D' => Step::Down,
                'F' => Step::Flat,
                other => return Err(Error::Parse(format!("bad step {other:?}"))),
            });
        }
        let kind = if steps.contains(&Step::Flat) { PathKind::Motzkin } else { PathKind::Dyck };
        LatticePath::new(kind, steps)
    }
}

/// All Dyck paths of length `2n`, depth-first with Up before Down.
pub fn enumerate_dyck(n: u64) -> Result<Vec<LatticePath>> {
    enumerate_dyck_capped(n, DEFAULT_DYCK_CAP)
}

pub fn enumerate_dyck_capped(n: u64, cap: u64) -> Result<Vec<LatticePath>> {
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    Ok(enumerate_paths(PathKind::Dyck, 2 * n))
}

/// All Motzkin paths of length `n`, depth-first with Up > Flat > Down.
pub fn enumerate_motzkin(n: u64) -> Result<Vec<LatticePath>> {
    enumerate_motzkin_capped(n, DEFAULT_MOTZKIN_CAP)
}

pub fn enumerate_motzkin_capped(n: u64, cap: u64) -> Result<Vec<LatticePath>> {
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    Ok(enumerate_paths(PathKind::Motzkin, n))
}

fn enumerate_paths(kind: PathKind, len: u64) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len as usize);
    extend_path(kind, len, 0, &mut steps, &mut out);
    out
}

fn extend_path(kind: PathKind, remaining: u64, height: u64, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
    if remaining == 0 {
        if height == 0 {
            out.push(LatticePath { kind, steps: steps.clone() });
        }
        return;
    }
    if height > remaining {
        return; // cannot come back down in time
    }
    if height < remaining {
        steps.push(Step::Up);
        extend_path(kind, remaining - 1, height + 1, steps, out);
        steps.pop();
    }
    if kind == PathKind::Motzkin && height <= remaining - 1 {
        steps.push(Step::Flat);
        extend_path(kind, remaining - 1, height, steps, out);
        steps.pop();
    }
    if height > 0 {
        steps.push(Step::Down);
        extend_path(kind, remaining - 1, height - 1, steps, out);
        steps.pop();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HumpMethod {
    Enumerate,
    Closed,
}

/// Total hump count over all paths of the given kind and length.
/// Closed forms: `C(2n-1, n)` for Dyck, and half of
/// `sum over j >= 1 of C(n,j) C(n-j,j)` for Motzkin (halving checked exact).
pub fn total_humps(kind: PathKind, n: u64, method: HumpMethod) -> Result<BigUint> {
    let cap = match kind {
        PathKind::Dyck => DEFAULT_DYCK_CAP,
        PathKind::Motzkin => DEFAULT_MOTZKIN_CAP,
    };
    total_humps_capped(kind, n, method, cap)
}

pub fn total_humps_capped(kind: PathKind, n: u64, method: HumpMethod, cap: u64) -> Result<BigUint> {
    match (kind, method) {
        (PathKind::Dyck, HumpMethod::Enumerate) => Ok(enumerate_dyck_capped(n, cap)?
            .iter()
            .map(|path| BigUint::from(path.count_humps()))
            .sum()),
        (PathKind::Motzkin, HumpMethod::Enumerate) => Ok(enumerate_motzkin_capped(n, cap)?
            .iter()
            .map(|path| BigUint::from(path.count_humps()))
            .sum()),
        (PathKind::Dyck, HumpMethod::Closed) => {
            Ok(if n == 0 { BigUint::zero() } else { binomial(2 * n - 1, n) })
        }
        (PathKind::Motzkin, HumpMethod::Closed) => {
            exact_div(&binomial_pair_sum(n), &BigUint::from(2u32), "Motzkin hump total")
        }
    }
}

/// Checks the hump/hook-sum correspondences at one length `n`:
/// the enumerated Motzkin hump total is `S(2,1;n) - 1`, the Dyck hump
/// total is the SYT count of `(n,1^n)` with `C_n = f^((n,n))` Dyck paths,
/// and the Motzkin path count is `S(3,0;n)`. Enumerates all paths of
/// length `n`, regardless of the default caps.
pub fn verify_correspondences(n: u64) -> VerificationReport {
    let start = Instant::now();
    let mut failure = None;

    let motzkin_humps = total_humps_capped(PathKind::Motzkin, n, HumpMethod::Enumerate, n)
        .expect("cap lifted");
    let s21 = hook_sum_direct(HookBound::new(2, 1), n);
    if &motzkin_humps + 1u32 != s21 {
        failure = Some(FirstFailure {
            index: n,
            lhs: format!("Motzkin hump total {motzkin_humps}"),
            rhs: format!("S(2,1;n) - 1 = {}", s21 - 1u32),
        });
    }

    if failure.is_none() && n >= 1 {
        let dyck_humps =
            total_humps_capped(PathKind::Dyck, n, HumpMethod::Enumerate, n).expect("cap lifted");
        let mut hook_parts = vec![n];
        hook_parts.extend(std::iter::repeat(1).take(n as usize));
        let hook_count = syt_count(&Partition::new(hook_parts).unwrap());
        if dyck_humps != hook_count {
            failure = Some(FirstFailure {
                index: n,
                lhs: format!("Dyck hump total {dyck_humps}"),
                rhs: format!("f^(n,1^n) = {hook_count}"),
            });
        } else {
            let dyck_count = enumerate_dyck_capped(n, n).expect("cap lifted").len();
            let rect = syt_count(&Partition::new(vec![n, n]).unwrap());
            if BigUint::from(dyck_count) != rect {
                failure = Some(FirstFailure {
                    index: n,
                    lhs: format!("Dyck path count {dyck_count}"),
                    rhs: format!("f^(n,n) = {rect}"),
                });
            }
        }
    }

    if failure.is_none() {
        let motzkin_count = enumerate_motzkin_capped(n, n).expect("cap lifted").len();
        let strip = strip_sum_closed(3, n).expect("k=3 is supported");
        if BigUint::from(motzkin_count) != strip {
            failure = Some(FirstFailure {
                index: n,
                lhs: format!("Motzkin path count {motzkin_count}"),
                rhs: format!("S(3,0;n) = {strip}"),
            });
        }
    }

    VerificationReport {
        identity: "hump-correspondences".into(),
        range: [n, n],
        status: if failure.is_none() { Status::Pass } else { Status::Fail },
        first_failure: failure,
        elapsed: start.elapsed(),
    }
}
