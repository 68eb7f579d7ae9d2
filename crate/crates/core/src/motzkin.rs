//! The Motzkin-sums function `a(n)`, Motzkin numbers, and Catalan numbers.
//!
//! `a(n)` is the degree of the Motzkin-sums character; it satisfies
//! `a(n) + a(n+1) = M_n` and the recurrence
//! `a(n) = (n-1)/(n+1) * (2 a(n-1) + 3 a(n-2))` for `n >= 3`, with
//! `a(1) = 0`, `a(2) = 1`. `a(0) = 1` by convention (the degree of the
//! trivial character at level 0).

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use once_cell::sync::Lazy;

use crate::arith::{binomial, exact_div, factorial_table};
use crate::{Error, Result};

/// Evaluation route for [`motzkin_sum_a`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AMethod {
    /// The explicit double-hook degree sum.
    Explicit,
    /// The three-term recurrence with exact division by `n + 1`.
    Recurrence,
}

// ascending tabulation shared by sequence queries; a(0..=2) seed the table
static A_TABLE: Lazy<Mutex<Vec<BigUint>>> =
    Lazy::new(|| Mutex::new(vec![BigUint::one(), BigUint::zero(), BigUint::one()]));

/// The Motzkin-sums function by the chosen method. Both methods agree on
/// all `n`; the recurrence route is memoized.
pub fn motzkin_sum_a(n: u64, method: AMethod) -> BigUint {
    match method {
        AMethod::Explicit => a_explicit(n),
        AMethod::Recurrence => a_recurrence(n),
    }
}

/// Explicit form: `a(n) = sum over 1 <= k <= n/2 of
/// n! / ((k-1)! k! (n-2k)! (n-k) (n-k+1))`; empty sum is 0 for `n >= 1`,
/// and `a(0) = 1`.
pub fn a_explicit(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let fact = factorial_table(n);
    let mut acc = BigUint::zero();
    for k in 1..=n / 2 {
        let den = &fact[(k - 1) as usize]
            * &fact[k as usize]
            * &fact[(n - 2 * k) as usize]
            * (n - k)
            * (n - k + 1);
        acc += exact_div(&fact[n as usize], &den, "a(n) explicit term")
            .expect("double-hook degrees are integers");
    }
    acc
}

/// Recurrence form, memoized. The division by `n + 1` is exact on this
/// sequence and is asserted, never rounded.
pub fn a_recurrence(n: u64) -> BigUint {
    let mut table = A_TABLE.lock().unwrap();
    while table.len() as u64 <= n {
        let m = table.len() as u64;
        let prev = &table[(m - 1) as usize];
        let prev2 = &table[(m - 2) as usize];
        let num = (prev * 2u32 + prev2 * 3u32) * (m - 1);
        let next = exact_div(&num, &BigUint::from(m + 1), "a(n) recurrence")
            .expect("(n+1) divides (n-1)(2a(n-1)+3a(n-2))");
        table.push(next);
    }
    table[n as usize].clone()
}

/// Motzkin number `M_n = a(n) + a(n+1)`.
pub fn motzkin_number(n: u64) -> BigUint {
    a_recurrence(n) + a_recurrence(n + 1)
}

/// Catalan number `C_n = (2n)! / (n! (n+1)!) = C(2n,n) / (n+1)`.
pub fn catalan(n: u64) -> BigUint {
    exact_div(&binomial(2 * n, n), &BigUint::from(n + 1), "Catalan number")
        .expect("(n+1) divides C(2n,n)")
}

/// `4 a(n) / M_n` from the exact integers, to ~15 significant digits.
/// Tends to 1 as `n` grows. Requires `n >= 1`.
pub fn asymptotic_ratio(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::OutOfDomain("asymptotic ratio needs n >= 1".into()));
    }
    const SCALE: u64 = 1_000_000_000_000_000; // 10^15
    let num = a_recurrence(n) * 4u32 * SCALE;
    let den = motzkin_number(n);
    let q = (num / den).to_u64().expect("ratio is bounded by 4");
    Ok(q as f64 / SCALE as f64)
}
