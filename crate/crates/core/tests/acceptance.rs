//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;

use sytsums::arith::binomial;
use sytsums::characters::verify_p3;
use sytsums::harness::verify;
use sytsums::hook_sums::{
    hook_sum_closed_11, hook_sum_closed_21, hook_sum_closed_31, hook_sum_direct, strip_sum_closed,
    S21Variant,
};
use sytsums::motzkin::{a_explicit, a_recurrence, asymptotic_ratio, catalan, motzkin_number};
use sytsums::partition::{enumerate_hook, HookBound, Partition};
use sytsums::paths::{enumerate_dyck, total_humps_capped, HumpMethod, PathKind};
use sytsums::tableaux::{syt_count, syt_enumerate_count_capped};

fn pass(n: u32, what: &str) {
    println!("[acceptance] criterion {n} ({what}): pass");
}

#[test]
fn criterion_01_oracle_equivalence() {
    let start = Instant::now();
    for n in 0..=12u64 {
        for shape in enumerate_hook(HookBound::new(n, 0), n) {
            assert_eq!(
                syt_enumerate_count_capped(&shape, 12).unwrap(),
                syt_count(&shape),
                "oracle mismatch at {shape}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "oracle sweep took {elapsed:?}");
    pass(1, "brute-force SYT enumeration equals the hook formula, n <= 12");
}

#[test]
fn criterion_02_strip_sums() {
    for k in 2..=5u64 {
        for n in 0..=40u64 {
            assert_eq!(
                strip_sum_closed(k, n).unwrap(),
                hook_sum_direct(HookBound::new(k, 0), n),
                "S({k},0;{n}) closed vs direct"
            );
        }
        for n in 0..=12u64 {
            let oracle: BigUint = enumerate_hook(HookBound::new(k, 0), n)
                .iter()
                .map(|shape| syt_enumerate_count_capped(shape, 12).unwrap())
                .sum();
            assert_eq!(strip_sum_closed(k, n).unwrap(), oracle, "S({k},0;{n}) vs oracle");
        }
    }
    pass(2, "closed strip sums S(2..5,0;n) equal direct sums, n <= 40");
}

#[test]
fn criterion_03_hook_sums() {
    for n in 1..=40u64 {
        assert_eq!(
            hook_sum_closed_11(n).unwrap(),
            BigUint::one() << (n - 1),
            "S(1,1;{n}) != 2^(n-1)"
        );
        assert_eq!(
            hook_sum_closed_11(n).unwrap(),
            hook_sum_direct(HookBound::new(1, 1), n),
            "S(1,1;{n}) vs direct"
        );
    }
    for n in 2..=40u64 {
        let direct = hook_sum_direct(HookBound::new(2, 1), n);
        assert_eq!(hook_sum_closed_21(n, S21Variant::Original).unwrap(), direct, "S(2,1;{n}) orig");
        assert_eq!(
            hook_sum_closed_21(n, S21Variant::Rewritten).unwrap(),
            direct,
            "S(2,1;{n}) rewritten"
        );
    }
    for n in 0..=40u64 {
        assert_eq!(
            hook_sum_closed_31(n).unwrap(),
            hook_sum_direct(HookBound::new(3, 1), n),
            "S(3,1;{n})"
        );
    }
    pass(3, "closed hook sums for (1,1), (2,1), (3,1) equal direct sums, n <= 40");
}

#[test]
fn criterion_04_p3_character_identity() {
    let start = Instant::now();
    for n in 0..=12u64 {
        let report = verify_p3(n);
        assert!(report.passed(), "p3 failed: {report}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "p3 sweep took {elapsed:?}");
    pass(4, "coefficient-level p3 identity holds for 0 <= n <= 12");
}

#[test]
fn criterion_05_prop32_b3_b4() {
    let start = Instant::now();
    for name in ["b3", "b4"] {
        let report = verify(name, 2, 200).unwrap();
        assert!(report.passed(), "{report}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "b3/b4 sweep took {elapsed:?}");
    pass(5, "identities b3 and b4 hold for 2 <= m <= 200");
}

#[test]
fn criterion_06_lemma42() {
    let start = Instant::now();
    let report = verify("lemma42", 2, 300).unwrap();
    assert!(report.passed(), "{report}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "lemma42 sweep took {elapsed:?}");
    pass(6, "the binomial lemma holds for 2 <= n <= 300");
}

#[test]
fn criterion_07_motzkin_hump_theorem() {
    for n in 1..=14u64 {
        let enumerated =
            total_humps_capped(PathKind::Motzkin, n, HumpMethod::Enumerate, 14).unwrap();
        let s21 = hook_sum_direct(HookBound::new(2, 1), n);
        assert_eq!(&enumerated + 1u32, s21, "HM_{n} != S(2,1;{n}) - 1");
        let closed = total_humps_capped(PathKind::Motzkin, n, HumpMethod::Closed, 14).unwrap();
        assert_eq!(closed, enumerated, "closed HM_{n} != enumerated");
    }
    pass(7, "Motzkin hump totals equal S(2,1;n) - 1, enumerated and closed, n <= 14");
}

#[test]
fn criterion_08_dyck_humps() {
    for n in 1..=12u64 {
        let enumerated = total_humps_capped(PathKind::Dyck, n, HumpMethod::Enumerate, 12).unwrap();
        assert_eq!(enumerated, binomial(2 * n - 1, n), "HD_{n} != C(2n-1,n)");
        let mut hook = vec![n];
        hook.extend(std::iter::repeat(1).take(n as usize));
        assert_eq!(enumerated, syt_count(&Partition::new(hook).unwrap()), "HD_{n} != f^(n,1^n)");
        let count = enumerate_dyck(n).unwrap().len();
        assert_eq!(BigUint::from(count), catalan(n), "path count != C_{n}");
        assert_eq!(
            BigUint::from(count),
            syt_count(&Partition::new(vec![n, n]).unwrap()),
            "path count != f^({n},{n})"
        );
    }
    pass(8, "Dyck hump totals and path counts match their SYT counts, n <= 12");
}

#[test]
fn criterion_09_motzkin_sums() {
    for n in 1..=500u64 {
        assert_eq!(a_explicit(n), a_recurrence(n), "a({n})");
    }
    for n in 0..=60u64 {
        let m = motzkin_number(n);
        assert_eq!(a_recurrence(n) + a_recurrence(n + 1), m, "a+a != M_{n}");
        assert_eq!(strip_sum_closed(3, n).unwrap(), m, "S(3,0;{n}) != M_{n}");
    }
    pass(9, "explicit and recurrence a(n) agree to 500; a(n)+a(n+1) = M_n = S(3,0;n) to 60");
}

#[test]
fn criterion_10_asymptotics() {
    let mut prev_gap = f64::INFINITY;
    for n in (50..=400).step_by(10) {
        let gap = (asymptotic_ratio(n).unwrap() - 1.0).abs();
        assert!(gap < prev_gap, "|4a/M - 1| not decreasing at n = {n}");
        prev_gap = gap;
    }
    let gap_200 = (asymptotic_ratio(200).unwrap() - 1.0).abs();
    assert!(gap_200 < 0.05, "|4a/M - 1| = {gap_200} at n = 200");
    pass(10, "4a(n)/M_n approaches 1 monotonically on the sampled range");
}
