//! C ABI for the sytsums library.
//!
//! Conventions: every fallible call returns a [`SytsumsStatus`]; results
//! are written through out-pointers. Big integers cross the boundary as
//! NUL-terminated decimal strings allocated by this library and released
//! with [`sytsums_string_free`]. Partitions are opaque handles created by
//! [`sytsums_partition_parse`] and released with [`sytsums_partition_free`].
//!
//! The matching header is `include/sytsums.h`; keep the two in sync.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sytsums::harness;
use sytsums::hook_sums::{self, S21Variant, SumMethod};
use sytsums::motzkin::{self, AMethod};
use sytsums::partition::{HookBound, Partition};
use sytsums::paths::{self, HumpMethod, PathKind};
use sytsums::tableaux;
use sytsums::{BigUint, Error};

/// Status codes shared with the C header.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SytsumsStatus {
    Ok = 0,
    InvalidArgument = 1,
    OutOfDomain = 2,
    CapExceeded = 3,
    Indivisible = 4,
    UnknownIdentity = 5,
    VerificationFailed = 6,
    NullPointer = 7,
}

/// Opaque partition handle.
pub struct SytsumsPartition(Partition);

fn status_for(e: &Error) -> SytsumsStatus {
    match e {
        Error::NotWeaklyDecreasing(_) | Error::Parse(_) => SytsumsStatus::InvalidArgument,
        Error::OutOfDomain(_) | Error::UnsupportedStrip(_) | Error::InvalidRange { .. } => {
            SytsumsStatus::OutOfDomain
        }
        Error::CapExceeded { .. } => SytsumsStatus::CapExceeded,
        Error::Indivisible(_) => SytsumsStatus::Indivisible,
        Error::UnknownIdentity(_) => SytsumsStatus::UnknownIdentity,
    }
}

/// Writes `text` through `out` as a freshly allocated C string.
unsafe fn write_string(out: *mut *mut c_char, text: String) -> SytsumsStatus {
    if out.is_null() {
        return SytsumsStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            SytsumsStatus::Ok
        }
        Err(_) => SytsumsStatus::InvalidArgument,
    }
}

unsafe fn write_value(
    out: *mut *mut c_char,
    value: sytsums::Result<BigUint>,
) -> SytsumsStatus {
    match value {
        Ok(v) => write_string(out, v.to_string()),
        Err(e) => status_for(&e),
    }
}

/// Frees a string allocated by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sytsums_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a partition from its textual form, e.g. "4,2^3,1".
#[no_mangle]
pub unsafe extern "C" fn sytsums_partition_parse(
    text: *const c_char,
    out: *mut *mut SytsumsPartition,
) -> SytsumsStatus {
    if text.is_null() || out.is_null() {
        return SytsumsStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return SytsumsStatus::InvalidArgument;
    };
    match text.parse::<Partition>() {
        Ok(p) => {
            *out = Box::into_raw(Box::new(SytsumsPartition(p)));
            SytsumsStatus::Ok
        }
        Err(e) => {
            *out = ptr::null_mut();
            status_for(&e)
        }
    }
}

/// Frees a partition handle. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn sytsums_partition_free(p: *mut SytsumsPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The canonical textual form of a partition.
#[no_mangle]
pub unsafe extern "C" fn sytsums_partition_to_string(
    p: *const SytsumsPartition,
    out: *mut *mut c_char,
) -> SytsumsStatus {
    let Some(p) = p.as_ref() else {
        return SytsumsStatus::NullPointer;
    };
    write_string(out, p.0.to_string())
}

/// SYT count of a shape by the hook formula, as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn sytsums_syt_count(
    p: *const SytsumsPartition,
    out: *mut *mut c_char,
) -> SytsumsStatus {
    let Some(p) = p.as_ref() else {
        return SytsumsStatus::NullPointer;
    };
    write_value(out, Ok(tableaux::syt_count(&p.0)))
}

/// Brute-force SYT count; fails with CapExceeded when the shape's size
/// exceeds `cap`.
#[no_mangle]
pub unsafe extern "C" fn sytsums_syt_oracle_count(
    p: *const SytsumsPartition,
    cap: u64,
    out: *mut *mut c_char,
) -> SytsumsStatus {
    let Some(p) = p.as_ref() else {
        return SytsumsStatus::NullPointer;
    };
    write_value(out, tableaux::syt_enumerate_count_capped(&p.0, cap))
}

/// The hook sum S(k,l;n). `closed` nonzero selects the closed form, which
/// exists only for the strips k<=5 and the (1,1), (2,1), (3,1) hooks.
#[no_mangle]
pub unsafe extern "C" fn sytsums_hook_sum(
    k: u64,
    l: u64,
    n: u64,
    closed: i32,
    out: *mut *mut c_char,
) -> SytsumsStatus {
    let value = if closed == 0 {
        Ok(hook_sums::hook_sum_direct(HookBound::new(k, l), n))
    } else {
        let (k, l) = if k >= l { (k, l) } else { (l, k) };
        match (k, l) {
            (1, 1) => hook_sums::hook_sum_closed_11(n),
            (2, 1) => hook_sums::hook_sum_closed_21(n, S21Variant::Rewritten),
            (3, 1) => hook_sums::hook_sum_closed_31(n),
            (k, 0) if (2..=5).contains(&k) => hook_sums::strip_sum_closed(k, n),
            _ => Err(Error::OutOfDomain(format!("no closed form for S({k},{l};n)"))),
        }
    };
    write_value(out, value)
}

/// The star sub-sum S*(2,2;n) for n >= 4.
#[no_mangle]
pub unsafe extern "C" fn sytsums_star_sum(
    n: u64,
    closed: i32,
    out: *mut *mut c_char,
) -> SytsumsStatus {
    let method = if closed == 0 { SumMethod::Direct } else { SumMethod::Closed };
    write_value(out, hook_sums::star_sum(n, method))
}

/// The Motzkin-sums function a(n).
#[no_mangle]
pub unsafe extern "C" fn sytsums_motzkin_sum_a(n: u64, out: *mut *mut c_char) -> SytsumsStatus {
    write_value(out, Ok(motzkin::motzkin_sum_a(n, AMethod::Recurrence)))
}

/// The Motzkin number M_n.
#[no_mangle]
pub unsafe extern "C" fn sytsums_motzkin_number(n: u64, out: *mut *mut c_char) -> SytsumsStatus {
    write_value(out, Ok(motzkin::motzkin_number(n)))
}

/// The Catalan number C_n.
#[no_mangle]
pub unsafe extern "C" fn sytsums_catalan(n: u64, out: *mut *mut c_char) -> SytsumsStatus {
    write_value(out, Ok(motzkin::catalan(n)))
}

/// Total hump count over all paths of one kind (0 = Dyck, 1 = Motzkin)
/// and length. `closed` nonzero uses the closed form; otherwise the paths
/// are enumerated subject to `cap`.
#[no_mangle]
pub unsafe extern "C" fn sytsums_total_humps(
    kind: i32,
    n: u64,
    closed: i32,
    cap: u64,
    out: *mut *mut c_char,
) -> SytsumsStatus {
    let kind = match kind {
        0 => PathKind::Dyck,
        1 => PathKind::Motzkin,
        _ => return SytsumsStatus::InvalidArgument,
    };
    let method = if closed == 0 { HumpMethod::Enumerate } else { HumpMethod::Closed };
    write_value(out, paths::total_humps_capped(kind, n, method, cap))
}

/// Verifies a registered identity over `[lo, hi]` and writes the report as
/// a JSON string. Returns Ok when the scan passes, VerificationFailed when
/// it fails (the report is still written), or an error status.
#[no_mangle]
pub unsafe extern "C" fn sytsums_verify(
    identity: *const c_char,
    lo: u64,
    hi: u64,
    report_json: *mut *mut c_char,
) -> SytsumsStatus {
    if identity.is_null() {
        return SytsumsStatus::NullPointer;
    }
    let Ok(identity) = CStr::from_ptr(identity).to_str() else {
        return SytsumsStatus::InvalidArgument;
    };
    match harness::verify(identity, lo, hi) {
        Ok(report) => {
            let passed = report.passed();
            let json = serde_json::to_string(&report).expect("report serializes");
            let status = write_string(report_json, json);
            if status != SytsumsStatus::Ok {
                status
            } else if passed {
                SytsumsStatus::Ok
            } else {
                SytsumsStatus::VerificationFailed
            }
        }
        Err(e) => status_for(&e),
    }
}
