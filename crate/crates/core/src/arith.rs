//! Big-integer helpers: factorials, binomials, exact division.
//!
//! Everything here is exact. Divisions that the callers rely on being
//! integral go through [`exact_div`], which reports a failed divisibility
//! instead of rounding.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// n! as a big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Ascending table of factorials 0!..=n!, for callers that need many of them.
pub fn factorial_table(n: u64) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(BigUint::one());
    for i in 1..=n {
        let next = table.last().unwrap() * i;
        table.push(next);
    }
    table
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Central binomials `C(m, floor(m/2))` for `m = 0..=n`, built by the
/// exact two-step recurrence instead of `n` independent products.
pub fn central_binomial_table(n: u64) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(BigUint::one());
    for m in 1..=n {
        let prev = table.last().unwrap();
        let next = if m % 2 == 1 {
            // C(2t+1, t) = C(2t, t) (2t+1) / (t+1)
            let t = m / 2;
            exact_div(&(prev * (2 * t + 1)), &BigUint::from(t + 1), "central binomial")
                .expect("(t+1) divides (2t+1) C(2t,t)")
        } else {
            prev * 2u32
        };
        table.push(next);
    }
    table
}

/// `sum over j = 1..=floor(n/2) of C(n,j) C(n-j,j)`, via the exact term
/// recurrence `t(j+1) = t(j) (n-2j)(n-2j-1) / (j+1)^2`.
pub fn binomial_pair_sum(n: u64) -> BigUint {
    if n < 2 {
        return BigUint::zero();
    }
    let mut term = BigUint::from(n * (n - 1)); // j = 1
    let mut acc = term.clone();
    for j in 1..n / 2 {
        let num = term * ((n - 2 * j) * (n - 2 * j - 1));
        term = exact_div(&num, &BigUint::from((j + 1) * (j + 1)), "pair sum term")
            .expect("term ratio is exact");
        acc += &term;
    }
    acc
}

/// Divides `num` by `den`, failing with [`Error::Indivisible`] when the
/// division leaves a remainder. `what` names the quantity for diagnostics.
pub fn exact_div(num: &BigUint, den: &BigUint, what: &str) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Indivisible(format!("{what}: {num} / {den}")))
    }
}
