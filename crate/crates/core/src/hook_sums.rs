//! The hook sums `S(k,l;n)`: direct evaluation over enumerated hooks and
//! every known closed form (strips `k <= 5`, the `(1,1)`, `(2,1)`, `(3,1)`
//! hooks, and the rectangular star sub-sums of the `(2,2)` hook).

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{binomial, central_binomial_table, exact_div, factorial_table};
use crate::motzkin::{a_recurrence, catalan};
use crate::partition::{enumerate_hook, enumerate_star, HookBound};
use crate::tableaux::syt_count;
use crate::{Error, Result};

/// Which route to evaluate a sum by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    Direct,
    Closed,
}

/// Variant of the `S(2,1;n)` closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S21Variant {
    /// The two-sum form: quarter of (row sum + tail sum), plus 1.
    Original,
    /// The rewrite through the Motzkin-sums function:
    /// quarter of (row sum + a(n) - 1), plus 1. Stated for `n >= 2`.
    Rewritten,
}

/// `S(k,l;n)` as a direct sum of SYT counts over the enumerated hook.
pub fn hook_sum_direct(h: HookBound, n: u64) -> BigUint {
    enumerate_hook(h, n).iter().map(syt_count).sum()
}

/// Closed strip sums `S(k,0;n)` for `k = 2..=5`.
pub fn strip_sum_closed(k: u64, n: u64) -> Result<BigUint> {
    match k {
        2 => Ok(binomial(n, n / 2)),
        3 => {
            let mut acc = BigUint::zero();
            for j in 0..=n / 2 {
                acc += binomial(n, 2 * j) * catalan(j);
            }
            Ok(acc)
        }
        4 => Ok(catalan((n + 1) / 2) * catalan(n / 2 + 1)),
        5 => {
            let fact = factorial_table(2 * (n / 2) + 3);
            let mut acc = BigUint::zero();
            for j in 0..=n / 2 {
                // 6 C_j (2j+2)! / ((j+2)!(j+3)!) is an integer for every j
                let num = catalan(j) * &fact[(2 * j + 2) as usize] * 6u32;
                let den = &fact[(j + 2) as usize] * &fact[(j + 3) as usize];
                acc += binomial(n, 2 * j) * exact_div(&num, &den, "S(5,0) term")?;
            }
            Ok(acc)
        }
        _ => Err(Error::UnsupportedStrip(k)),
    }
}

/// `S(1,1;n) = 2^(n-1)` for `n >= 1`.
pub fn hook_sum_closed_11(n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfDomain("S(1,1;n) closed form needs n >= 1".into()));
    }
    Ok(BigUint::one() << (n - 1))
}

/// The row sum `sum over r = 0..n-1 of C(n-r, floor((n-r)/2)) C(n, r)`
/// shared by both `S(2,1;n)` closed forms.
pub fn s21_row_sum(n: u64) -> BigUint {
    let central = central_binomial_table(n);
    let mut choose = BigUint::one(); // C(n, r), updated incrementally
    let mut acc = BigUint::zero();
    for r in 0..n {
        acc += &central[(n - r) as usize] * &choose;
        choose = choose * (n - r) / (r + 1);
    }
    acc
}

/// The tail sum `sum over k = 1..floor(n/2)-1 of
/// n! / (k! (k+1)! (n-2k-2)! (n-k-1) (n-k))`; each term is the SYT count of
/// a double hook, hence an integer. Empty ranges contribute 0.
pub fn s21_tail_sum(n: u64) -> BigUint {
    let mut acc = BigUint::zero();
    if n / 2 < 2 {
        return acc;
    }
    let fact = factorial_table(n);
    for k in 1..=n / 2 - 1 {
        let den = &fact[k as usize]
            * &fact[(k + 1) as usize]
            * &fact[(n - 2 * k - 2) as usize]
            * (n - k - 1)
            * (n - k);
        acc += exact_div(&fact[n as usize], &den, "S(2,1) tail term")
            .expect("double-hook degrees are integers");
    }
    acc
}

/// `S(2,1;n)` by closed form. The division by 4 must be exact and is
/// checked; the original variant is only integral from `n = 2` on.
pub fn hook_sum_closed_21(n: u64, variant: S21Variant) -> Result<BigUint> {
    let inner = match variant {
        S21Variant::Original => {
            if n == 0 {
                return Err(Error::OutOfDomain("S(2,1;n) original form needs n >= 1".into()));
            }
            s21_row_sum(n) + s21_tail_sum(n)
        }
        S21Variant::Rewritten => {
            if n < 2 {
                return Err(Error::OutOfDomain("S(2,1;n) rewritten form needs n >= 2".into()));
            }
            s21_row_sum(n) + a_recurrence(n) - BigUint::one()
        }
    };
    Ok(exact_div(&inner, &BigUint::from(4u32), "S(2,1) quarter")? + BigUint::one())
}

/// `S(3,1;n) = (1/2) [C(n, floor(n/2)) + sum over j = 0..n of a(j) C(n,j)]`,
/// with the `a(0) = 1` convention. The halving is checked exact.
pub fn hook_sum_closed_31(n: u64) -> Result<BigUint> {
    let mut acc = binomial(n, n / 2);
    for j in 0..=n {
        acc += a_recurrence(j) * binomial(n, j);
    }
    exact_div(&acc, &BigUint::from(2u32), "S(3,1) half")
}

/// `S*(2,2;n)`: the star sub-sum over the rectangular family. Direct sums
/// SYT counts over the family; closed uses `C_(m-1) C_m` for `n = 2m` and
/// `(2m+1) C_m^2 / (m+2)` for `n = 2m+1`. Requires `n >= 4`.
pub fn star_sum(n: u64, method: SumMethod) -> Result<BigUint> {
    match method {
        SumMethod::Direct => Ok(enumerate_star(n)?.iter().map(syt_count).sum()),
        SumMethod::Closed => {
            if n < 4 {
                return Err(Error::OutOfDomain(format!("star sum needs n >= 4, got {n}")));
            }
            let m = n / 2;
            if n % 2 == 0 {
                Ok(catalan(m - 1) * catalan(m))
            } else {
                let cm = catalan(m);
                let num = &cm * &cm * (2 * m + 1);
                exact_div(&num, &BigUint::from(m + 2), "odd star sum")
            }
        }
    }
}
