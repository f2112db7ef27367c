//! C ABI over `arthur-core`.
//!
//! Parameters live behind an opaque [`ArthurParam`] handle. Every function
//! returns an [`ArthurStatus`]; results come back through out-pointers.
//! Strings handed out by this library must be released with
//! [`arthur_string_free`]. After a non-OK status, [`arthur_last_error`]
//! describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use arthur_core::langlands::{csq_orbit_lemma, verify_clozel, verify_exp_proposition, verify_orbit_theorem, CsqKind};
use arthur_core::paramfile::{parse_parameter, serialize_parameter};
use arthur_core::parameters::{orbit_first_sl2, orbit_second_sl2, ArthurParameter, Sign};
use arthur_core::report::Report;
use arthur_core::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArthurStatus {
    Ok = 0,
    /// The computation ran and some check failed.
    CheckFailed = 1,
    InvalidInput = 2,
    NullPointer = 3,
    Utf8 = 4,
    Precondition = 5,
    Panic = 6,
}

/// Opaque parameter handle.
pub struct ArthurParam {
    inner: ArthurParameter,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("nul bytes removed"));
}

struct Failure(ArthurStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Precondition(_) | Error::DiagonalMismatch(_) | Error::Pairing(_) => ArthurStatus::Precondition,
            _ => ArthurStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

type Outcome = Result<ArthurStatus, Failure>;

/// Runs `body`, records failures and converts panics.
fn guard(body: impl FnOnce() -> Outcome) -> ArthurStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => {
            if status == ArthurStatus::Ok {
                set_error("");
            }
            status
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ArthurStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(ArthurStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(ArthurStatus::Utf8, e.to_string()))
}

unsafe fn param<'a>(p: *const ArthurParam) -> Result<&'a ArthurParameter, Failure> {
    p.as_ref().map(|p| &p.inner).ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(ArthurStatus::InvalidInput, e.to_string()))?;
    write_out(out, c.into_raw())
}

fn sign(value: i32) -> Result<Sign, Failure> {
    Sign::of(i64::from(value))
        .ok_or_else(|| Failure(ArthurStatus::InvalidInput, format!("sign must be 1 or -1, got {value}")))
}

/// Writes the report text and maps its verdict to a status.
unsafe fn finish_report(report: Report, out: *mut *mut c_char) -> Outcome {
    let passed = report.all_passed();
    if !out.is_null() {
        write_string(out, report.to_string())?;
    }
    Ok(if passed {
        ArthurStatus::Ok
    } else {
        ArthurStatus::CheckFailed
    })
}

/// Message for the last non-OK status on this thread. Valid until the next
/// call into the library from the same thread; never null.
#[no_mangle]
pub extern "C" fn arthur_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn arthur_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a parameter file held in `source`.
///
/// # Safety
/// `source` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_param_parse(source: *const c_char, out: *mut *mut ArthurParam) -> ArthurStatus {
    guard(|| {
        let text = text(source)?;
        if out.is_null() {
            return Err(null());
        }
        let inner = parse_parameter(text)?;
        write_out(out, Box::into_raw(Box::new(ArthurParam { inner })))?;
        Ok(ArthurStatus::Ok)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must come from [`arthur_param_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn arthur_param_free(p: *mut ArthurParam) {
    if !p.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(p))));
    }
}

/// Number of block instances.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_param_block_count(p: *const ArthurParam, out: *mut usize) -> ArthurStatus {
    guard(|| {
        write_out(out, param(p)?.len())?;
        Ok(ArthurStatus::Ok)
    })
}

/// Dimension `sum dim(rho) a b`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_param_dimension(p: *const ArthurParam, out: *mut u64) -> ArthurStatus {
    guard(|| {
        write_out(out, param(p)?.dimension())?;
        Ok(ArthurStatus::Ok)
    })
}

/// Canonical file text of the parameter.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_param_canonical(p: *const ArthurParam, out: *mut *mut c_char) -> ArthurStatus {
    guard(|| {
        write_string(out, serialize_parameter(param(p)?))?;
        Ok(ArthurStatus::Ok)
    })
}

/// Orbit of the first (`sl2 = 1`) or second (`sl2 = 2`) `SL(2)` factor
/// for label `rho`, as text like `[3,3]`.
///
/// # Safety
/// `p` must be a live handle, `rho` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_orbit(
    p: *const ArthurParam,
    rho: *const c_char,
    sl2: u32,
    out: *mut *mut c_char,
) -> ArthurStatus {
    guard(|| {
        let (psi, rho) = (param(p)?, text(rho)?);
        psi.label(rho)?;
        let orbit = match sl2 {
            1 => orbit_first_sl2(psi, rho),
            2 => orbit_second_sl2(psi, rho),
            _ => return Err(Failure(ArthurStatus::InvalidInput, format!("sl2 must be 1 or 2, got {sl2}"))),
        };
        write_string(out, orbit.to_string())?;
        Ok(ArthurStatus::Ok)
    })
}

/// Orbit check over every member with group sign `sign` (1 or -1).
/// Returns `CheckFailed` when some check fails. `report` may be null.
///
/// # Safety
/// `p` must be a live handle, `rho` a NUL-terminated string and `report`
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_check_orbit(
    p: *const ArthurParam,
    rho: *const c_char,
    sign: i32,
    report: *mut *mut c_char,
) -> ArthurStatus {
    guard(|| finish_report(verify_orbit_theorem(param(p)?, text(rho)?, self::sign(sign)?)?, report))
}

/// Exponent check over every member with group sign `sign`.
///
/// # Safety
/// As for [`arthur_check_orbit`].
#[no_mangle]
pub unsafe extern "C" fn arthur_check_exp(
    p: *const ArthurParam,
    rho: *const c_char,
    sign: i32,
    report: *mut *mut c_char,
) -> ArthurStatus {
    guard(|| finish_report(verify_exp_proposition(param(p)?, text(rho)?, self::sign(sign)?)?, report))
}

/// Orbit comparison of `q` inside `p` along the Jacquet chain.
///
/// # Safety
/// `p` and `q` must be live handles, `rho` a NUL-terminated string and
/// `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_check_clozel(
    p: *const ArthurParam,
    q: *const ArthurParam,
    rho: *const c_char,
    report: *mut *mut c_char,
) -> ArthurStatus {
    guard(|| finish_report(verify_clozel(param(p)?, param(q)?, text(rho)?)?, report))
}

/// One instance of the dominance lemma of kind 1, 2 or 3 for the decreasing
/// list `entries[0..len]`. `entries` may be null when `len` is 0.
///
/// # Safety
/// `entries` must point to `len` readable values and `holds` be writable.
#[no_mangle]
pub unsafe extern "C" fn arthur_csq(
    kind: u32,
    a: u32,
    b: u32,
    entries: *const u32,
    len: usize,
    holds: *mut bool,
) -> ArthurStatus {
    guard(|| {
        let kind: CsqKind = kind.to_string().parse()?;
        let list = if len == 0 {
            &[][..]
        } else if entries.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(entries, len)
        };
        write_out(holds, csq_orbit_lemma(kind, a, b, list)?.holds)?;
        Ok(ArthurStatus::Ok)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn arthur_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
