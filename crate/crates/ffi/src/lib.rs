//! C interface to the `regchains` solver.
//!
//! Systems and decompositions are opaque handles owned by the caller and
//! released with their `_free` function. Fallible calls return an
//! [`RcStatus`]; the message of the last failure on the calling thread is
//! available from [`rc_last_error_message`]. Strings returned by the library
//! are released with [`rc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use regchains::arith::Field;
use regchains::cli::{parse_system, Decomposition, SystemInput};
use regchains::decompose::{solve, Mode, SolveOptions};
use regchains::verify::{admissible_prime, check_decomposition};
use regchains::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Timeout = 5,
    /// The prime divides a coefficient or breaks a chain of the result.
    InadmissiblePrime = 6,
    /// Any other error reported by the solver.
    Failed = 7,
    /// A bug in the library; the handles involved are left untouched.
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcMode {
    Lazard = 0,
    Kalkbrener = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RcFormat {
    Text = 0,
    Json = 1,
}

/// A parsed polynomial system.
pub struct RcSystem {
    input: SystemInput,
}

/// The regular chains computed for a system.
pub struct RcDecomposition {
    inner: Decomposition,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(RcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => RcStatus::Parse,
            Error::Timeout => RcStatus::Timeout,
            Error::InvalidOptions(_) | Error::NotPrime(_) => RcStatus::InvalidArgument,
            _ => RcStatus::Failed,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {msg}"));
            RcStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(RcStatus::NullArgument, format!("`{what}` is null"))
}

unsafe fn utf8<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(RcStatus::InvalidUtf8, format!("`{what}`: {e}")))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Parses a system in the `.sys` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer. On
/// success `*out` receives a handle to free with [`rc_system_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_system_parse(text: *const c_char, out: *mut *mut RcSystem) -> RcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let input = parse_system(utf8(text, "text")?)?;
        *out = Box::into_raw(Box::new(RcSystem { input }));
        Ok(())
    })
}

/// Number of variables of the system, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle from [`rc_system_parse`].
#[no_mangle]
pub unsafe extern "C" fn rc_system_nvars(sys: *const RcSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.input.ring.nvars())
}

/// Number of polynomials in the system, or 0 for a null handle.
///
/// # Safety
/// `sys` must be null or a live handle from [`rc_system_parse`].
#[no_mangle]
pub unsafe extern "C" fn rc_system_len(sys: *const RcSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.input.polys.len())
}

/// # Safety
/// `sys` must be null or a handle from [`rc_system_parse`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn rc_system_free(sys: *mut RcSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Decomposes the system. `jobs` of 0 or 1 runs on the calling thread;
/// `timeout_ms` of 0 means no limit.
///
/// # Safety
/// `sys` must be a live system handle and `out` a valid pointer. On success
/// `*out` receives a handle to free with [`rc_decomposition_free`].
#[no_mangle]
pub unsafe extern "C" fn rc_solve(
    sys: *const RcSystem,
    mode: RcMode,
    squarefree: bool,
    jobs: u32,
    timeout_ms: u64,
    out: *mut *mut RcDecomposition,
) -> RcStatus {
    guard(|| {
        let sys = sys.as_ref().ok_or_else(|| null("sys"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mode = match mode {
            RcMode::Lazard => Mode::LazardWu,
            RcMode::Kalkbrener => Mode::Kalkbrener,
        };
        let opts = SolveOptions {
            mode,
            squarefree,
            jobs: jobs.max(1) as usize,
            timeout: (timeout_ms > 0).then(|| Duration::from_millis(timeout_ms)),
            ..SolveOptions::default()
        };
        let solved = solve(&sys.input.ring, &sys.input.polys, &opts)?;
        let inner = Decomposition {
            ring: sys.input.ring.clone(),
            mode,
            squarefree,
            chains: solved.split.into_chains(),
        };
        *out = Box::into_raw(Box::new(RcDecomposition { inner }));
        Ok(())
    })
}

/// Number of chains, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle from [`rc_solve`].
#[no_mangle]
pub unsafe extern "C" fn rc_decomposition_len(d: *const RcDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.chains.len())
}

/// Chain `index` as `[p_k, ..., p_1]`, greatest main variable first. Null
/// when the handle is null or the index out of range.
///
/// # Safety
/// `d` must be null or a live handle from [`rc_solve`].
#[no_mangle]
pub unsafe extern "C" fn rc_decomposition_chain(d: *const RcDecomposition, index: usize) -> *mut c_char {
    d.as_ref()
        .and_then(|d| d.inner.chains.get(index))
        .map_or(ptr::null_mut(), |c| into_c_string(c.to_string()))
}

/// The whole decomposition in the command line tool's text or JSON format.
///
/// # Safety
/// `d` must be null or a live handle from [`rc_solve`].
#[no_mangle]
pub unsafe extern "C" fn rc_decomposition_render(d: *const RcDecomposition, format: RcFormat) -> *mut c_char {
    let Some(d) = d.as_ref() else {
        return ptr::null_mut();
    };
    into_c_string(match format {
        RcFormat::Text => d.inner.render_text(),
        RcFormat::Json => d.inner.render_json(),
    })
}

/// Checks the decomposition of `sys` by enumerating points over GF(prime)
/// and stores the verdict in `*passed`.
///
/// # Safety
/// `sys` and `d` must be live handles, `d` computed from `sys`, and `passed`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rc_decomposition_verify(
    sys: *const RcSystem,
    d: *const RcDecomposition,
    prime: u64,
    passed: *mut bool,
) -> RcStatus {
    guard(|| {
        let sys = sys.as_ref().ok_or_else(|| null("sys"))?;
        let d = d.as_ref().ok_or_else(|| null("d"))?;
        if passed.is_null() {
            return Err(null("passed"));
        }
        Field::prime(prime)?;
        let c = sys.input.ring.field().characteristic();
        if c != 0 && c != prime {
            return Err(Failure(
                RcStatus::InvalidArgument,
                format!("the system is over GF({c}), not GF({prime})"),
            ));
        }
        if c == 0 && !admissible_prime(&sys.input.polys, &d.inner.chains, prime) {
            return Err(Failure(
                RcStatus::InadmissiblePrime,
                format!("{prime} divides a coefficient or breaks a chain"),
            ));
        }
        let report = check_decomposition(&sys.input.ring, &sys.input.polys, &d.inner.chains, d.inner.mode, prime)?;
        *passed = report.passed;
        Ok(())
    })
}

/// # Safety
/// `d` must be null or a handle from [`rc_solve`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn rc_decomposition_free(d: *mut RcDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn rc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into the library on the same
/// thread.
#[no_mangle]
pub extern "C" fn rc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
