//! Formal sums of irreducible symmetric-group characters, Young's rule for
//! outer products with one-row shapes, the Motzkin-sums character `psi(n)`,
//! and the coefficient-level check of the `(3,1)` hook character identity.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;

use crate::motzkin::{motzkin_sum_a, AMethod};
use crate::partition::{enumerate_hook, HookBound, Partition};
use crate::report::{FirstFailure, Status, VerificationReport};
use crate::tableaux::syt_count;

/// A formal nonnegative-integer combination of irreducible characters of
/// one symmetric group: every key is a partition of `level`. Zero
/// multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSum {
    level: u64,
    terms: BTreeMap<Partition, u64>,
}

impl CharacterSum {
    /// The zero character sum at the given level.
    pub fn zero(level: u64) -> Self {
        CharacterSum { level, terms: BTreeMap::new() }
    }

    /// The level `n` all keys share.
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, shape: &Partition) -> u64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    /// Adds `mult` copies of the irreducible labeled by `shape`.
    /// Panics if the shape's size differs from the level.
    pub fn add_term(&mut self, shape: Partition, mult: u64) {
        assert_eq!(shape.size(), self.level, "key size must match level");
        if mult > 0 {
            *self.terms.entry(shape).or_insert(0) += mult;
        }
    }

    /// Sum of two character sums of the same level.
    pub fn add(&self, other: &CharacterSum) -> CharacterSum {
        assert_eq!(self.level, other.level, "levels must match");
        let mut out = self.clone();
        for (shape, &mult) in &other.terms {
            out.add_term(shape.clone(), mult);
        }
        out
    }

    /// The sum with every multiplicity scaled by `c`.
    pub fn scaled(&self, c: u64) -> CharacterSum {
        let mut out = CharacterSum::zero(self.level);
        if c > 0 {
            for (shape, &mult) in &self.terms {
                out.add_term(shape.clone(), mult * c);
            }
        }
        out
    }

    /// Terms in canonical order: lexicographically decreasing partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &m)| (p, m))
    }

    /// `sum of multiplicity(shape) * f^shape`.
    pub fn degree(&self) -> BigUint {
        self.terms.iter().map(|(shape, &mult)| syt_count(shape) * mult).sum()
    }
}

/// Young's rule: decomposes `chi^shape (outer) chi^(n)` as the
/// multiplicity-free sum over partitions of `|shape| + n` that interlace
/// `shape` row by row.
pub fn young_outer_one_row(shape: &Partition, n: u64) -> CharacterSum {
    let mut out = CharacterSum::zero(shape.size() + n);
    let mut rows = Vec::new();
    extend_rows(shape, 0, n, &mut rows, &mut out);
    out
}

fn extend_rows(shape: &Partition, row: usize, budget: u64, rows: &mut Vec<u64>, out: &mut CharacterSum) {
    if row > shape.rows() {
        if budget == 0 {
            let mu = Partition::new(rows.clone()).expect("interlaced rows are weakly decreasing");
            out.add_term(mu, 1);
        }
        return;
    }
    let base = shape.part(row);
    // row 0 is unbounded above; row i is capped by shape's row i-1
    let max_add = if row == 0 { budget } else { budget.min(shape.part(row - 1) - base) };
    for add in 0..=max_add {
        rows.push(base + add);
        extend_rows(shape, row + 1, budget - add, rows, out);
        rows.pop();
    }
}

/// Linear extension of Young's rule to sums: the outer product of `cs`
/// with the one-row character `chi^(n)`. With `n = 0` this is the identity.
pub fn outer_with_one_row(cs: &CharacterSum, n: u64) -> CharacterSum {
    if n == 0 {
        return cs.clone();
    }
    let mut out = CharacterSum::zero(cs.level() + n);
    for (shape, mult) in cs.iter() {
        out = out.add(&young_outer_one_row(shape, n).scaled(mult));
    }
    out
}

/// The Motzkin-sums character: `sum over 1 <= k <= n/2 of
/// chi^((k,k,1^(n-2k)))` for `n >= 1`; the trivial character at `n = 0`.
/// Its degree is the Motzkin-sums function `a(n)`.
pub fn psi(n: u64) -> CharacterSum {
    let mut out = CharacterSum::zero(n);
    if n == 0 {
        out.add_term(Partition::empty(), 1);
        return out;
    }
    for k in 1..=n / 2 {
        let mut parts = vec![k, k];
        parts.extend(std::iter::repeat(1).take((n - 2 * k) as usize));
        out.add_term(Partition::new(parts).expect("double hook is a partition"), 1);
    }
    out
}

/// `omega(n) = sum over j = 0..n of psi(j) (outer) chi^((n-j))`.
pub fn omega(n: u64) -> CharacterSum {
    let mut out = CharacterSum::zero(n);
    for j in 0..=n {
        out = out.add(&outer_with_one_row(&psi(j), n - j));
    }
    out
}

/// The hook character: multiplicity 1 on every partition of `n` in the
/// `(k,l)` hook. Its degree is `S(k,l;n)`.
pub fn chi_hook(h: HookBound, n: u64) -> CharacterSum {
    let mut out = CharacterSum::zero(n);
    for shape in enumerate_hook(h, n) {
        out.add_term(shape, 1);
    }
    out
}

/// Coefficient-level check of the `(3,1)` hook character identity at one
/// level: `chi(2,0;n) + omega(n) = 2 chi(3,1;n)`, every coefficient of
/// `omega(n)` is 1 or 2, and it is 1 exactly on partitions with at most
/// two rows.
pub fn verify_p3(n: u64) -> VerificationReport {
    let start = Instant::now();
    let om = omega(n);
    let lhs = chi_hook(HookBound::new(2, 0), n).add(&om);
    let rhs = chi_hook(HookBound::new(3, 1), n).scaled(2);

    let mut failure = None;
    let mut keys: Vec<&Partition> = lhs.terms.keys().chain(rhs.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    for shape in keys.into_iter().rev() {
        let (a, b) = (lhs.multiplicity(shape), rhs.multiplicity(shape));
        if a != b {
            failure = Some(FirstFailure {
                index: n,
                lhs: format!("mult({shape}) = {a} in chi(2,0;n) + omega(n)"),
                rhs: format!("mult({shape}) = {b} in 2 chi(3,1;n)"),
            });
            break;
        }
    }
    if failure.is_none() {
        for (shape, mult) in om.iter() {
            let two_rows = shape.rows() <= 2;
            let expected = if two_rows { 1 } else { 2 };
            if mult != expected {
                failure = Some(FirstFailure {
                    index: n,
                    lhs: format!("mult({shape}) = {mult} in omega(n)"),
                    rhs: format!("expected {expected} ({} rows)", shape.rows()),
                });
                break;
            }
        }
    }
    VerificationReport {
        identity: "p3".into(),
        range: [n, n],
        status: if failure.is_none() { Status::Pass } else { Status::Fail },
        first_failure: failure,
        elapsed: start.elapsed(),
    }
}

/// Degree check for `psi`, kept next to its definition.
pub fn psi_degree_matches(n: u64) -> bool {
    psi(n).degree() == motzkin_sum_a(n, AMethod::Recurrence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::hook_sums::hook_sum_direct;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sum_of(level: u64, terms: &[(&[u64], u64)]) -> CharacterSum {
        let mut cs = CharacterSum::zero(level);
        for (parts, mult) in terms {
            cs.add_term(p(parts), *mult);
        }
        cs
    }

    #[test]
    fn young_rule_examples() {
        assert_eq!(
            young_outer_one_row(&p(&[1]), 1),
            sum_of(2, &[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            young_outer_one_row(&p(&[1, 1]), 1),
            sum_of(3, &[(&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        let cs = young_outer_one_row(&p(&[2, 1]), 2);
        assert_eq!(cs.degree(), BigUint::from(20u32));
    }

    #[test]
    fn young_rule_degree_and_interlacing() {
        for size in 0..=8u64 {
            for shape in enumerate_hook(HookBound::new(size, 0), size) {
                for n in 0..=8u64 {
                    let cs = young_outer_one_row(&shape, n);
                    assert_eq!(cs.degree(), syt_count(&shape) * binomial(size + n, n));
                    for (mu, mult) in cs.iter() {
                        assert_eq!(mult, 1, "{shape} + row {n} at {mu}");
                        for i in 0..mu.rows() {
                            assert!(mu.part(i) >= shape.part(i));
                            if i > 0 {
                                assert!(shape.part(i - 1) >= mu.part(i));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_row_strip_decomposition() {
        // chi^(floor(n/2)) outer chi^(ceil(n/2)) covers exactly the
        // two-row partitions, each once
        for n in 1..=20u64 {
            let cs = young_outer_one_row(&p(&[n / 2]), n - n / 2);
            let hook: Vec<Partition> = enumerate_hook(HookBound::new(2, 0), n);
            let keys: Vec<Partition> = cs.iter().map(|(q, _)| q.clone()).collect();
            assert_eq!(keys, hook, "n={n}");
            assert!(cs.iter().all(|(_, m)| m == 1));
            assert_eq!(cs.degree(), binomial(n, n / 2));
        }
    }

    #[test]
    fn linear_extension() {
        let zero = CharacterSum::zero(2);
        assert!(outer_with_one_row(&zero, 3).is_zero());

        let trivial = sum_of(0, &[(&[], 1)]);
        assert_eq!(outer_with_one_row(&trivial, 4), sum_of(4, &[(&[4], 1)]));

        let mixed = sum_of(2, &[(&[1, 1], 1), (&[2], 1)]);
        assert_eq!(
            outer_with_one_row(&mixed, 1),
            sum_of(3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(2), sum_of(2, &[(&[1, 1], 1)]));
        assert!(psi(1).is_zero());
        assert_eq!(psi(4), sum_of(4, &[(&[1, 1, 1, 1], 1), (&[2, 2], 1)]));
        assert_eq!(psi(0), sum_of(0, &[(&[], 1)]));
    }

    #[test]
    fn psi_degree_is_a() {
        for n in 0..=30 {
            assert!(psi_degree_matches(n), "deg psi({n}) != a({n})");
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(
            omega(3),
            sum_of(3, &[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 2)])
        );
        assert_eq!(omega(0), sum_of(0, &[(&[], 1)]));
        // (1,1) enters omega(2) only through psi(2), with multiplicity 1,
        // consistent with the two-row coefficient rule checked in p3
        assert_eq!(omega(2), sum_of(2, &[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn chi_hook_examples() {
        assert_eq!(
            chi_hook(HookBound::new(2, 0), 3),
            sum_of(3, &[(&[3], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            chi_hook(HookBound::new(1, 1), 3),
            sum_of(3, &[(&[3], 1), (&[2, 1], 1), (&[1, 1, 1], 1)])
        );
        assert_eq!(chi_hook(HookBound::new(3, 3), 3).terms.len(), 3);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(chi_hook(HookBound::new(2, 1), 3).degree(), BigUint::from(4u32));
        assert_eq!(CharacterSum::zero(5).degree(), BigUint::from(0u32));
        assert_eq!(psi(4).degree(), BigUint::from(3u32));
    }

    #[test]
    fn degree_matches_hook_sum() {
        for n in 0..=10u64 {
            for k in 0..=3 {
                for l in 0..=3 {
                    let h = HookBound::new(k, l);
                    assert_eq!(chi_hook(h, n).degree(), hook_sum_direct(h, n));
                }
            }
        }
    }

    #[test]
    fn p3_passes() {
        for n in 0..=12u64 {
            let report = verify_p3(n);
            assert!(report.passed(), "p3 failed at {n}: {report}");
        }
    }
}
