//! Registry of the displayed identities and a range-runner that certifies
//! each one over exact-integer index ranges.
//!
//! Every identity is evaluated through at least two disjoint code paths
//! (closed-form kernels against direct enumeration or an independent
//! formula); a scan records the first index where any pair of routes
//! disagrees, including a failed interior divisibility.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{binomial, binomial_pair_sum, exact_div, factorial_table};
use crate::hook_sums::{
    hook_sum_closed_21, hook_sum_closed_31, hook_sum_direct, s21_row_sum, s21_tail_sum, star_sum,
    strip_sum_closed, S21Variant, SumMethod,
};
use crate::motzkin::{a_explicit, a_recurrence, motzkin_number};
use crate::partition::HookBound;
use crate::paths::{total_humps, HumpMethod, PathKind};
use crate::report::{FirstFailure, Status, VerificationReport};
use crate::{Error, Result};

/// Verification breadth: `Quick` covers the desk-scale default ranges,
/// `Full` extends them several-fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

struct Identity {
    name: &'static str,
    min_index: u64,
    quick: (u64, u64),
    full: (u64, u64),
    // all returned routes must agree; an Err is a failure at that index
    eval: fn(u64) -> Result<Vec<(&'static str, BigUint)>>,
}

const IDENTITIES: &[Identity] = &[
    Identity {
        name: "b3",
        min_index: 2,
        quick: (2, 200),
        full: (2, 1000),
        eval: eval_b3,
    },
    Identity {
        name: "b4",
        min_index: 2,
        quick: (2, 200),
        full: (2, 1000),
        eval: eval_b4,
    },
    Identity {
        name: "lemma42",
        min_index: 2,
        quick: (2, 300),
        full: (2, 2000),
        eval: eval_lemma42,
    },
    Identity {
        name: "a3-equiv",
        min_index: 2,
        quick: (2, 300),
        full: (2, 2000),
        eval: eval_a3_equiv,
    },
    Identity {
        name: "rewrite8",
        min_index: 0,
        quick: (0, 40),
        full: (0, 120),
        eval: eval_rewrite8,
    },
    Identity {
        name: "a-recurrence",
        min_index: 3,
        quick: (3, 500),
        full: (3, 2000),
        eval: eval_a_recurrence,
    },
    Identity {
        name: "a-motzkin",
        min_index: 0,
        quick: (0, 60),
        full: (0, 600),
        eval: eval_a_motzkin,
    },
    Identity {
        name: "prop31-star-even",
        min_index: 2,
        quick: (2, 200),
        full: (2, 500),
        eval: eval_star_even,
    },
    Identity {
        name: "prop31-star-odd",
        min_index: 2,
        quick: (2, 200),
        full: (2, 500),
        eval: eval_star_odd,
    },
    Identity {
        name: "hump-theorem",
        min_index: 2,
        quick: (2, 300),
        full: (2, 2000),
        eval: eval_hump_theorem,
    },
];

/// Names of all registered identities, in registry order.
pub fn identity_names() -> Vec<&'static str> {
    IDENTITIES.iter().map(|id| id.name).collect()
}

/// The default scan range of a registered identity under a profile.
pub fn default_range(name: &str, profile: Profile) -> Result<(u64, u64)> {
    IDENTITIES
        .iter()
        .find(|id| id.name == name)
        .map(|id| match profile {
            Profile::Quick => id.quick,
            Profile::Full => id.full,
        })
        .ok_or_else(|| Error::UnknownIdentity(name.into()))
}

/// Scans one identity over `[lo, hi]`, stopping at the first failure.
pub fn verify(name: &str, lo: u64, hi: u64) -> Result<VerificationReport> {
    let identity = IDENTITIES
        .iter()
        .find(|id| id.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.into()))?;
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    if lo < identity.min_index {
        return Err(Error::OutOfDomain(format!(
            "identity {name} is defined from index {}, got {lo}",
            identity.min_index
        )));
    }
    Ok(scan(identity, lo, hi))
}

/// Runs every registered identity over its default range for the profile.
pub fn verify_all(profile: Profile) -> Vec<VerificationReport> {
    IDENTITIES
        .iter()
        .map(|identity| {
            let (lo, hi) = match profile {
                Profile::Quick => identity.quick,
                Profile::Full => identity.full,
            };
            scan(identity, lo, hi)
        })
        .collect()
}

fn scan(identity: &Identity, lo: u64, hi: u64) -> VerificationReport {
    let start = Instant::now();
    let mut failure = None;
    'outer: for index in lo..=hi {
        match (identity.eval)(index) {
            Ok(routes) => {
                let (first_label, first_value) = &routes[0];
                for (label, value) in &routes[1..] {
                    if value != first_value {
                        failure = Some(FirstFailure {
                            index,
                            lhs: format!("{first_label} = {first_value}"),
                            rhs: format!("{label} = {value}"),
                        });
                        break 'outer;
                    }
                }
            }
            Err(e) => {
                failure = Some(FirstFailure {
                    index,
                    lhs: "evaluation".into(),
                    rhs: e.to_string(),
                });
                break;
            }
        }
    }
    VerificationReport {
        identity: identity.name.into(),
        range: [lo, hi],
        status: if failure.is_none() { Status::Pass } else { Status::Fail },
        first_failure: failure,
        elapsed: start.elapsed(),
    }
}

// C_(m-1) C_m as a Catalan product, as the middle-binomial expression,
// and as the k-sum of double-hook degrees.
fn eval_b3(m: u64) -> Result<Vec<(&'static str, BigUint)>> {
    let catalan_product = crate::motzkin::catalan(m - 1) * crate::motzkin::catalan(m);
    let middle = exact_div(
        &(binomial(2 * m - 2, m - 1) * binomial(2 * m, m)),
        &BigUint::from(m * (m + 1)),
        "b3 middle form",
    )?;
    let fact = factorial_table(2 * m);
    let mut ksum = BigUint::zero();
    for k in 0..=m - 2 {
        let den = &fact[k as usize]
            * &fact[(k + 1) as usize]
            * &fact[(m - k - 2) as usize]
            * &fact[(m - k - 1) as usize]
            * ((m - 1) * m * m * (m + 1));
        ksum += exact_div(&fact[(2 * m) as usize], &den, "b3 term")?;
    }
    Ok(vec![
        ("C_(m-1) C_m", catalan_product),
        ("middle binomial form", middle),
        ("k-sum", ksum),
    ])
}

// (2m+1)/(m+2) C_m^2 in its three displayed forms.
fn eval_b4(m: u64) -> Result<Vec<(&'static str, BigUint)>> {
    let cm = crate::motzkin::catalan(m);
    let closed = exact_div(&(&cm * &cm * (2 * m + 1)), &BigUint::from(m + 2), "b4 closed form")?;
    let middle = exact_div(
        &(binomial(2 * m, m) * binomial(2 * m + 1, m)),
        &BigUint::from((m + 1) * (m + 2)),
        "b4 middle form",
    )?;
    let fact = factorial_table(2 * m + 1);
    let mut ksum = BigUint::zero();
    for k in 0..=m - 2 {
        let den = &fact[k as usize]
            * &fact[(k + 2) as usize]
            * &fact[(m - k - 2) as usize]
            * &fact[(m - k - 1) as usize]
            * ((m - 1) * m * (m + 1) * (m + 2));
        ksum += exact_div(&(&fact[(2 * m + 1) as usize] * 2u32), &den, "b4 term")?;
    }
    Ok(vec![
        ("(2m+1)/(m+2) C_m^2", closed),
        ("middle binomial form", middle),
        ("k-sum", ksum),
    ])
}

// twice the j-sum of C(n,j) C(n-j,j) against the row sum plus a(n) - 1
// and the row sum plus the explicit tail sum.
fn eval_lemma42(n: u64) -> Result<Vec<(&'static str, BigUint)>> {
    let jsum = binomial_pair_sum(n);
    let row = s21_row_sum(n);
    let via_a = &row + a_recurrence(n) - 1u32;
    let via_tail = row + s21_tail_sum(n);
    Ok(vec![
        ("2 j-sum", jsum * 2u32),
        ("row sum + a(n) - 1", via_a),
        ("row sum + k-sum", via_tail),
    ])
}

// the explicit tail sum of the S(2,1;n) formula collapses to a(n) - 1.
fn eval_a3_equiv(n: u64) -> Result<Vec<(&'static str, BigUint)>> {
    Ok(vec![
        ("k-sum", s21_tail_sum(n)),
        ("a(n) - 1", a_recurrence(n) - 1u32),
    ])
}

// the half-sum closed form for S(3,1;n) against the direct hook sum.
fn eval_rewrite8(n: u64) -> Result<Vec<(&'static str, BigUint)>> {
    Ok(vec![
        ("closed S(3,1;n)", hook_sum_closed_31(n)?),
        ("direct S(3,1;n)", hook_sum_direct(HookBound::new(3, 1), n)),
    ])
}

fn eval_a_recurrence(n: u64) -> Result<Vec<(&'static str, BigUint)>> {
    Ok(vec![
        ("a(n) recurrence", a_recurrence(n)),
        ("a(n) explicit", a_explicit(n)),
    ])
}

// a(n) + a(n+1) = M_n = S(3,0;n), with the two a-routes kept disjoint.
fn eval_a_motzkin(n: u64) -> Result<Vec<(&'static str, BigUint)>> {
    Ok(vec![
        ("a(n) + a(n+1) explicit", a_explicit(n) + a_explicit(n + 1)),
        ("M_n", motzkin_number(n)),
        ("S(3,0;n)", strip_sum_closed(3, n)?),
    ])
}

// S*(2,2;2m) three ways: closed Catalan product, direct SYT sum over the
// star family, and the S(4,0;2m-2) strip value.
fn eval_star_even(m: u64) -> Result<Vec<(&'static str, BigUint)>> {
    Ok(vec![
        ("closed C_(m-1) C_m", star_sum(2 * m, SumMethod::Closed)?),
        ("direct S*(2,2;2m)", star_sum(2 * m, SumMethod::Direct)?),
        ("S(4,0;2m-2)", strip_sum_closed(4, 2 * m - 2)?),
    ])
}

// S*(2,2;2m+1) three ways, the strip route scaled by (2m+1)/(m+2).
fn eval_star_odd(m: u64) -> Result<Vec<(&'static str, BigUint)>> {
    let strip = strip_sum_closed(4, 2 * m - 1)? * (2 * m + 1);
    Ok(vec![
        ("closed (2m+1)/(m+2) C_m^2", star_sum(2 * m + 1, SumMethod::Closed)?),
        ("direct S*(2,2;2m+1)", star_sum(2 * m + 1, SumMethod::Direct)?),
        ("(2m+1)/(m+2) S(4,0;2m-1)", exact_div(&strip, &BigUint::from(m + 2), "scaled strip")?),
    ])
}

// the closed Motzkin hump total against S(2,1;n) - 1 via the rewritten
// closed form; closed forms only on both sides.
fn eval_hump_theorem(n: u64) -> Result<Vec<(&'static str, BigUint)>> {
    Ok(vec![
        ("closed HM_n", total_humps(PathKind::Motzkin, n, HumpMethod::Closed)?),
        ("closed S(2,1;n) - 1", hook_sum_closed_21(n, S21Variant::Rewritten)? - 1u32),
    ])
}
