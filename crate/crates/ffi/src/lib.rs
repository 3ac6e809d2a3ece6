//! C ABI over `linco`.
//!
//! Results come back through out-pointers to opaque handles; every call
//! returns a [`LincoStatus`]. On failure a message is available from
//! [`linco_last_error`] on the same thread. Strings and handles handed out
//! here must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use linco::algebra::{Bindings, ExactPoly};
use linco::family::Family;
use linco::linearize::{expansion_coefficients, linearize, Method};
use linco::partition::{enumerate_inhomogeneous, Composition, PartitionFilter};
use linco::verify::{verify_suite, Suite};
use linco::{Error, Limits};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LincoStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    SizeLimit = 3,
    IdentityViolation = 4,
    Unsupported = 5,
    VerificationFailed = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LincoMethod {
    PartitionSum = 0,
    Oracle = 1,
}

/// An exact polynomial in `t`, `q`, `alpha`.
pub struct LincoPoly(ExactPoly);

/// Basis coefficients of a product, index `m` for `P_m`.
pub struct LincoExpansion(Vec<ExactPoly>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LincoStatus {
    match e {
        Error::SizeLimit { .. } | Error::DegreeLimit { .. } => LincoStatus::SizeLimit,
        Error::InexactDivision { .. } => LincoStatus::IdentityViolation,
        Error::UnsupportedFamily(_) => LincoStatus::Unsupported,
        _ => LincoStatus::InvalidArgument,
    }
}

fn guard(body: impl FnOnce() -> Result<(), (LincoStatus, String)>) -> LincoStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LincoStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            LincoStatus::Panic
        }
    }
}

fn lib<T>(r: linco::Result<T>) -> Result<T, (LincoStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (LincoStatus, String) {
    (LincoStatus::NullArgument, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LincoStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (LincoStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn composition(
    parts: *const usize,
    len: usize,
) -> Result<Composition, (LincoStatus, String)> {
    if len == 0 {
        return lib(Composition::new(Vec::new()));
    }
    if parts.is_null() {
        return Err(null("degrees"));
    }
    lib(Composition::new(
        std::slice::from_raw_parts(parts, len).to_vec(),
    ))
}

fn limits() -> Result<Limits, (LincoStatus, String)> {
    lib(Limits::from_env())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message for the most recent failure on this thread, or null. Valid until
/// the next `linco_*` call on the same thread.
#[no_mangle]
pub extern "C" fn linco_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// `⟨P_{n_1} ⋯ P_{n_k}⟩` for the named family; `method` is a [`LincoMethod`].
///
/// # Safety
/// `family` must be a nul-terminated string, `degrees` must point to `len`
/// values (or be null when `len` is 0), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn linco_linearize(
    family: *const c_char,
    degrees: *const usize,
    len: usize,
    method: c_int,
    out: *mut *mut LincoPoly,
) -> LincoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f: Family = lib(text(family, "family")?.parse())?;
        let c = composition(degrees, len)?;
        let m = match method {
            x if x == LincoMethod::PartitionSum as c_int => Method::PartitionSum,
            x if x == LincoMethod::Oracle as c_int => Method::Oracle,
            other => {
                return Err((
                    LincoStatus::InvalidArgument,
                    format!("unknown method {other}"),
                ))
            }
        };
        let r = lib(linearize(&f.spec(), &c, m, &limits()?))?;
        *out = Box::into_raw(Box::new(LincoPoly(r.value)));
        Ok(())
    })
}

/// Basis expansion of `P_{n_1} ⋯ P_{n_k}`.
///
/// # Safety
/// Same contract as [`linco_linearize`].
#[no_mangle]
pub unsafe extern "C" fn linco_expand(
    family: *const c_char,
    degrees: *const usize,
    len: usize,
    out: *mut *mut LincoExpansion,
) -> LincoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f: Family = lib(text(family, "family")?.parse())?;
        let c = composition(degrees, len)?;
        let e = lib(expansion_coefficients(&f.spec(), &c, &limits()?))?;
        *out = Box::into_raw(Box::new(LincoExpansion(e.coeffs)));
        Ok(())
    })
}

/// Number of coefficients (`n + 1`), or 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle from [`linco_expand`].
#[no_mangle]
pub unsafe extern "C" fn linco_expansion_len(e: *const LincoExpansion) -> usize {
    e.as_ref().map_or(0, |e| e.0.len())
}

/// Copy of coefficient `index` as a new polynomial handle.
///
/// # Safety
/// `e` must be a live expansion handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn linco_expansion_coeff(
    e: *const LincoExpansion,
    index: usize,
    out: *mut *mut LincoPoly,
) -> LincoStatus {
    guard(|| {
        let e = e.as_ref().ok_or_else(|| null("expansion"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let c = e.0.get(index).ok_or_else(|| {
            (
                LincoStatus::InvalidArgument,
                format!("index {index} out of range"),
            )
        })?;
        *out = Box::into_raw(Box::new(LincoPoly(c.clone())));
        Ok(())
    })
}

/// Evaluates `p` at bindings such as `"q=1,t=3/2"`.
///
/// # Safety
/// `p` must be a live handle, `bindings` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn linco_poly_substitute(
    p: *const LincoPoly,
    bindings: *const c_char,
    out: *mut *mut LincoPoly,
) -> LincoStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("poly"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let b = lib(Bindings::parse(text(bindings, "bindings")?))?;
        *out = Box::into_raw(Box::new(LincoPoly(p.0.substitute(&b))));
        Ok(())
    })
}

/// Canonical text such as `"t^2*q + t^2"`. Free with [`linco_string_free`].
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn linco_poly_to_string(p: *const LincoPoly) -> *mut c_char {
    p.as_ref()
        .map_or(ptr::null_mut(), |p| into_c_string(p.0.to_string()))
}

/// JSON term list. Free with [`linco_string_free`].
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn linco_poly_to_json(p: *const LincoPoly) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| {
        into_c_string(serde_json::to_string(&p.0).expect("terms serialize"))
    })
}

/// Parses a JSON term list produced by [`linco_poly_to_json`].
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn linco_poly_from_json(
    json: *const c_char,
    out: *mut *mut LincoPoly,
) -> LincoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p: ExactPoly = serde_json::from_str(text(json, "json")?)
            .map_err(|e| (LincoStatus::InvalidArgument, e.to_string()))?;
        *out = Box::into_raw(Box::new(LincoPoly(p)));
        Ok(())
    })
}

/// 1 when equal, 0 when not, -1 if either handle is null.
///
/// # Safety
/// Both pointers must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn linco_poly_equal(a: *const LincoPoly, b: *const LincoPoly) -> c_int {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => c_int::from(a.0 == b.0),
        _ => -1,
    }
}

/// Counts inhomogeneous partitions of the composition passing `filter`
/// (`"all"`, `"pair"`, `"noncrossing"`, ...).
///
/// # Safety
/// `parts` must point to `len` values, `filter` be nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn linco_partition_count(
    parts: *const usize,
    len: usize,
    filter: *const c_char,
    out: *mut u64,
) -> LincoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = composition(parts, len)?;
        if c.is_empty() {
            return Err((LincoStatus::InvalidArgument, "empty composition".into()));
        }
        let filter = lib(PartitionFilter::parse(text(filter, "filter")?))?;
        *out = lib(enumerate_inhomogeneous(&c, filter, &limits()?))?.count() as u64;
        Ok(())
    })
}

/// Runs a verification suite. Returns `VerificationFailed` when any check
/// fails; the report text is then in [`linco_last_error`].
///
/// # Safety
/// `suite` must be a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn linco_verify(suite: *const c_char, max_n: usize) -> LincoStatus {
    guard(|| {
        let suite: Suite = lib(text(suite, "suite")?.parse())?;
        let report = lib(verify_suite(suite, max_n, &limits()?))?;
        if report.passed() {
            Ok(())
        } else {
            Err((LincoStatus::VerificationFailed, report.to_string()))
        }
    })
}

/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn linco_poly_free(p: *mut LincoPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `e` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn linco_expansion_free(e: *mut LincoExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn linco_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
