//! C ABI over the `ncloop` library.
//!
//! Handles are opaque `NcLoop*` values from [`ncloop_new`] and must be
//! released with [`ncloop_free`]. Every fallible call returns an
//! [`NcStatus`] and writes its result through an out-pointer; on failure
//! [`ncloop_last_error`] describes what went wrong on the calling thread.
//! Strings returned to the caller are owned by Rust and must be released
//! with [`ncloop_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ncloop::{explorer, Error, PrimeLoop};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotFound = 2,
    NullPointer = 3,
    Internal = 4,
}

/// Opaque handle around a growable S-table.
pub struct NcLoop {
    inner: PrimeLoop,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> NcStatus {
    set_error(err.to_string());
    match err {
        Error::InvalidArgument(_) => NcStatus::InvalidArgument,
        Error::NotFound { .. } => NcStatus::NotFound,
        _ => NcStatus::Internal,
    }
}

/// Run `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), NcStatus>) -> NcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            NcStatus::Internal
        }
    }
}

unsafe fn handle<'a>(h: *const NcLoop) -> Result<&'a PrimeLoop, NcStatus> {
    match h.as_ref() {
        Some(h) => Ok(&h.inner),
        None => {
            set_error("null handle");
            Err(NcStatus::NullPointer)
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), NcStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(NcStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

/// Create a handle with the table pre-sieved up to `initial_bound`.
/// Returns NULL if `initial_bound` is 0.
#[no_mangle]
pub extern "C" fn ncloop_new(initial_bound: u64) -> *mut NcLoop {
    match catch_unwind(|| PrimeLoop::with_bound(initial_bound)) {
        Ok(Ok(inner)) => Box::into_raw(Box::new(NcLoop { inner })),
        Ok(Err(e)) => {
            status_of(&e);
            ptr::null_mut()
        }
        Err(_) => {
            set_error("internal panic");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `h` must be NULL or a handle from [`ncloop_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ncloop_free(h: *mut NcLoop) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Current bound of the handle's table (0 for a NULL handle).
///
/// # Safety
/// `h` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ncloop_table_bound(h: *const NcLoop) -> u64 {
    h.as_ref().map_or(0, |h| h.inner.snapshot().bound())
}

/// True iff `n` is 1 or an odd prime.
#[no_mangle]
pub extern "C" fn ncloop_is_in_s(n: u64) -> bool {
    ncloop::is_in_s(n)
}

/// `N(x)`, the least element of S greater than `x`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncloop_next_in_s(h: *const NcLoop, x: u64, out: *mut u64) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        if x > u64::MAX / 4 {
            set_error("argument too large");
            return Err(NcStatus::InvalidArgument);
        }
        write(out, lp.next_in_s(x).get())
    })
}

/// `a • b`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncloop_dot(h: *const NcLoop, a: u64, b: u64, out: *mut u64) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        let v = lp.dot(a, b).map_err(|e| status_of(&e))?;
        write(out, v.get())
    })
}

/// Zero-based rank of `s` in S.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncloop_rank(h: *const NcLoop, s: u64, out: *mut u64) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        let r = lp.rank(s).map_err(|e| status_of(&e))?;
        write(out, r as u64)
    })
}

/// Whether `a` and `b` are consecutive elements of S.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncloop_adjacent_in_s(
    h: *const NcLoop,
    a: u64,
    b: u64,
    out: *mut bool,
) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        let adj = lp.adjacent_in_s(a, b).map_err(|e| status_of(&e))?;
        write(out, adj)
    })
}

/// Smallest `a ≥ s`, `a ≤ limit`, with `a • s = a`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncloop_absorbing_partner(
    h: *const NcLoop,
    s: u64,
    limit: u64,
    out: *mut u64,
) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        let a = explorer::absorbing_partner(lp, s, limit).map_err(|e| status_of(&e))?;
        write(out, a.get())
    })
}

/// Smallest odd prime `≤ limit` preceded by at least `min_run` non-primes.
///
/// # Safety
/// `h` must be a live handle; `out_prime` and `out_run` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ncloop_gap_search(
    h: *const NcLoop,
    min_run: u64,
    limit: u64,
    out_prime: *mut u64,
    out_run: *mut u64,
) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        if out_prime.is_null() || out_run.is_null() {
            set_error("null output pointer");
            return Err(NcStatus::NullPointer);
        }
        let w = lp.gap_search(min_run, limit).map_err(|e| status_of(&e))?;
        write(out_prime, w.prime.get())?;
        write(out_run, w.preceding_composite_run)
    })
}

/// Number of pairs `a > b` in `S ∩ [1, bound]` with `a • b = x`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ncloop_fiber_count(
    h: *const NcLoop,
    x: u64,
    bound: u64,
    include_one: bool,
    out: *mut u64,
) -> NcStatus {
    guard(|| {
        let lp = handle(h)?;
        let r = explorer::fiber_solutions(lp, x, bound, include_one).map_err(|e| status_of(&e))?;
        write(out, r.count)
    })
}

/// Run a CLI invocation in-process. `argv` holds `argc` NUL-terminated
/// UTF-8 strings and excludes the program name. Standard output of the run
/// is returned in `*out_stdout` (free with [`ncloop_string_free`]) and the
/// CLI exit status in `*out_exit`. The return value reports only FFI-level
/// failures; a nonzero exit status is still `NC_STATUS_OK`.
///
/// # Safety
/// `argv` must point to `argc` valid C strings; out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ncloop_cli_run(
    argv: *const *const c_char,
    argc: usize,
    out_stdout: *mut *mut c_char,
    out_exit: *mut i32,
) -> NcStatus {
    guard(|| {
        if (argv.is_null() && argc > 0) || out_stdout.is_null() || out_exit.is_null() {
            set_error("null pointer argument");
            return Err(NcStatus::NullPointer);
        }
        let mut args = vec!["ncloop".to_string()];
        for i in 0..argc {
            let p = *argv.add(i);
            if p.is_null() {
                set_error(format!("argv[{i}] is NULL"));
                return Err(NcStatus::NullPointer);
            }
            match CStr::from_ptr(p).to_str() {
                Ok(s) => args.push(s.to_string()),
                Err(_) => {
                    set_error(format!("argv[{i}] is not UTF-8"));
                    return Err(NcStatus::InvalidArgument);
                }
            }
        }
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = ncloop::cli::run_with(args, &mut stdout, &mut stderr);
        if code != 0 {
            set_error(String::from_utf8_lossy(&stderr).trim_end().to_string());
        }
        stdout.retain(|&b| b != 0);
        let text = CString::new(stdout).expect("NULs removed");
        write(out_stdout, text.into_raw())?;
        write(out_exit, code)
    })
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ncloop_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ncloop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ncloop_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
