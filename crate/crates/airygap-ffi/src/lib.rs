//! C ABI surface: opaque partition handles, status codes mirroring the
//! CLI exit-code map, and scalar entry points for the main laws.
//!
//! Every function is null-safe and catches panics at the boundary; the
//! last error message is kept per thread and retrievable as UTF-8.

use std::cell::RefCell;
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use airygap::distributions::{gap_probability, kth_largest_cdf, spacing_survival, sum_two_cdf};
use airygap::fredholm::{fredholm_det_default, PartitionSpec};
use airygap::painleve::{solve_coupled_pii, tw_log_integral};
use airygap::Error;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AirygapStatus {
    Ok = 0,
    /// A pointer argument was null.
    NullArgument = 1,
    /// Parameter validation failed.
    Validation = 2,
    /// The solver or discretization failed.
    Solver = 3,
    /// A tolerance contract was violated.
    Tolerance = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

/// Opaque multi-interval partition (x, s).
pub struct AirygapPartition {
    inner: PartitionSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.to_string());
}

fn status_of(err: &Error) -> AirygapStatus {
    match err {
        Error::Domain(_) | Error::Config(_) => AirygapStatus::Validation,
        Error::Tolerance(_) => AirygapStatus::Tolerance,
        _ => AirygapStatus::Solver,
    }
}

fn guard<F: FnOnce() -> AirygapStatus>(f: F) -> AirygapStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("panic caught at the FFI boundary");
            AirygapStatus::Panic
        }
    }
}

fn finish(result: Result<f64, Error>, out: *mut f64) -> AirygapStatus {
    match result {
        Ok(v) => {
            unsafe { *out = v };
            set_error("");
            AirygapStatus::Ok
        }
        Err(err) => {
            set_error(&err.to_string());
            status_of(&err)
        }
    }
}

/// Copy the last error message of this thread into `buf` (truncated,
/// always NUL-terminated); returns the full message length in bytes.
///
/// # Safety
/// `buf` must point to `len` writable bytes, or be null with `len` 0.
#[no_mangle]
pub unsafe extern "C" fn airygap_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Create a partition from `k` interval endpoints (strictly decreasing)
/// and `k` weights in [0, 1]; the handle must be released with
/// `airygap_partition_free`.
///
/// # Safety
/// `x` and `s` must point to `k` readable doubles; `out` must be a
/// valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn airygap_partition_new(
    x: *const f64,
    s: *const f64,
    k: usize,
    out: *mut *mut AirygapPartition,
) -> AirygapStatus {
    if x.is_null() || s.is_null() || out.is_null() || k == 0 {
        set_error("airygap_partition_new: null argument or k = 0");
        return AirygapStatus::NullArgument;
    }
    let xv = std::slice::from_raw_parts(x, k).to_vec();
    let sv = std::slice::from_raw_parts(s, k).to_vec();
    guard(|| match PartitionSpec::new(xv.clone(), sv.clone()) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(AirygapPartition { inner: p }));
            set_error("");
            AirygapStatus::Ok
        }
        Err(err) => {
            set_error(&err.to_string());
            status_of(&err)
        }
    })
}

/// Release a partition handle; null is ignored.
///
/// # Safety
/// `p` must come from `airygap_partition_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn airygap_partition_free(p: *mut AirygapPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// F(x; s) with the default scheme; also reports log F and the embedded
/// discretization error estimate (either out-pointer may be null).
///
/// # Safety
/// `p` must be a live partition handle; `out_det` must be writable.
#[no_mangle]
pub unsafe extern "C" fn airygap_fredholm_det(
    p: *const AirygapPartition,
    out_det: *mut f64,
    out_log_det: *mut f64,
    out_err_est: *mut f64,
) -> AirygapStatus {
    if p.is_null() || out_det.is_null() {
        set_error("airygap_fredholm_det: null argument");
        return AirygapStatus::NullArgument;
    }
    let part = &(*p).inner;
    guard(|| match fredholm_det_default(part) {
        Ok(r) => {
            *out_det = r.det;
            if !out_log_det.is_null() {
                *out_log_det = r.log_det;
            }
            if !out_err_est.is_null() {
                *out_err_est = r.err_est;
            }
            set_error("");
            AirygapStatus::Ok
        }
        Err(err) => {
            set_error(&err.to_string());
            status_of(&err)
        }
    })
}

/// log F(x; s) through the coupled Painlevé II route (Airy data
/// anchored at `t`, integrator tolerance `tol`).
///
/// # Safety
/// `p` must be a live partition handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn airygap_pii_log_det(
    p: *const AirygapPartition,
    t: f64,
    tol: f64,
    out: *mut f64,
) -> AirygapStatus {
    if p.is_null() || out.is_null() {
        set_error("airygap_pii_log_det: null argument");
        return AirygapStatus::NullArgument;
    }
    let part = &(*p).inner;
    guard(|| {
        finish(
            solve_coupled_pii(part, t, tol).and_then(|sol| tw_log_integral(&sol)),
            out,
        )
    })
}

/// P(zeta_ell < x) for the ell-th largest particle.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn airygap_kth_largest_cdf(
    ell: usize,
    x: f64,
    out: *mut f64,
) -> AirygapStatus {
    if out.is_null() {
        set_error("airygap_kth_largest_cdf: null argument");
        return AirygapStatus::NullArgument;
    }
    guard(|| finish(kth_largest_cdf(ell, x), out))
}

/// P(no particles in (x2, x1)).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn airygap_gap_probability(
    x2: f64,
    x1: f64,
    out: *mut f64,
) -> AirygapStatus {
    if out.is_null() {
        set_error("airygap_gap_probability: null argument");
        return AirygapStatus::NullArgument;
    }
    guard(|| finish(gap_probability(x2, x1), out))
}

/// P(zeta_1 - zeta_2 > sigma).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn airygap_spacing_survival(sigma: f64, out: *mut f64) -> AirygapStatus {
    if out.is_null() {
        set_error("airygap_spacing_survival: null argument");
        return AirygapStatus::NullArgument;
    }
    guard(|| finish(spacing_survival(sigma), out))
}

/// P(zeta_1 + zeta_2 < sigma).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn airygap_sum_two_cdf(sigma: f64, out: *mut f64) -> AirygapStatus {
    if out.is_null() {
        set_error("airygap_sum_two_cdf: null argument");
        return AirygapStatus::NullArgument;
    }
    guard(|| finish(sum_two_cdf(sigma), out))
}
