//! Counting standard Young tableaux: hook formula, closed forms for
//! special shapes, and a brute-force backtracking oracle.

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{binomial, exact_div, factorial};
use crate::partition::Partition;
use crate::{Error, Result};

/// Default size cap for the brute-force enumerator.
pub const DEFAULT_ENUM_CAP: u64 = 16;

/// Number of SYT of the given shape, by the hook formula:
/// `size! / product of hook lengths`. The division is exact.
pub fn syt_count(shape: &Partition) -> BigUint {
    let mut hooks = BigUint::one();
    for row in shape.hook_lengths() {
        for h in row {
            hooks *= h;
        }
    }
    exact_div(&factorial(shape.size()), &hooks, "hook formula")
        .expect("hook product divides size!")
}

/// Closed form for the double-hook shape `(k, k, 1^(n-2k))`:
/// `n! / ((k-1)! k! (n-2k)! (n-k) (n-k+1))`. Requires `1 <= k` and `2k <= n`.
pub fn syt_count_double_hook(k: u64, n: u64) -> Result<BigUint> {
    if k == 0 || 2 * k > n {
        return Err(Error::OutOfDomain(format!(
            "double hook needs 1 <= k and 2k <= n, got k={k}, n={n}"
        )));
    }
    let den = factorial(k - 1) * factorial(k) * factorial(n - 2 * k) * (n - k) * (n - k + 1);
    exact_div(&factorial(n), &den, "double hook count")
}

/// Closed form for the hook shape `(n, 1^n)`: `C(2n-1, n)`. Requires `n >= 1`.
pub fn syt_count_hook_shape(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfDomain("hook shape (n,1^n) needs n >= 1".into()));
    }
    Ok(binomial(2 * n - 1, n))
}

/// Brute-force SYT count with the default size cap.
pub fn syt_enumerate_count(shape: &Partition) -> Result<BigUint> {
    syt_enumerate_count_capped(shape, DEFAULT_ENUM_CAP)
}

/// Brute-force SYT count: places 1..n cell by cell so that rows and columns
/// stay strictly increasing, and counts completed fillings. Independent of
/// the hook formula.
pub fn syt_enumerate_count_capped(shape: &Partition, cap: u64) -> Result<BigUint> {
    let n = shape.size();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let parts = shape.parts();
    let mut filled = vec![0u64; parts.len()];
    Ok(BigUint::from(place_next(parts, &mut filled, n)))
}

fn place_next(parts: &[u64], filled: &mut [u64], remaining: u64) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        // a cell (i, filled[i]) is addable iff the row has space and the
        // row above is strictly longer so far
        let row_open = filled[i] < parts[i];
        let col_ok = i == 0 || filled[i - 1] > filled[i];
        if row_open && col_ok {
            filled[i] += 1;
            total += place_next(parts, filled, remaining - 1);
            filled[i] -= 1;
        }
    }
    total
}
