//! C ABI over the `fqsym` library.
//!
//! Elements are opaque `FqsymElement` handles released with
//! `fqsym_element_free`. Strings handed out by the library are NUL-terminated
//! UTF-8 and released with `fqsym_string_free`. Every fallible call returns an
//! `FqsymStatus`; on failure `fqsym_last_error` describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fqsym::bases::{expand, transition_matrix, BasisTag};
use fqsym::error::Error;
use fqsym::json::TaggedElem;
use fqsym::perm::Permutation;
use fqsym::verify::{run_suite, Bounds, Suite};

/// Largest permutation size accepted by any call.
pub const FQSYM_MAX_N: usize = 6;

#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FqsymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownBasis = 4,
    BoundExceeded = 5,
    Computation = 6,
    Panic = 7,
}

/// Opaque element: a linear combination over one named basis.
pub struct FqsymElement {
    inner: TaggedElem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> FqsymStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => FqsymStatus::Parse,
        Error::UnknownBasis(_) => FqsymStatus::UnknownBasis,
        Error::BoundExceeded { .. } => FqsymStatus::BoundExceeded,
        _ => FqsymStatus::Computation,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), FqsymStatus>) -> FqsymStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FqsymStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            FqsymStatus::Panic
        }
    }
}

fn fail(e: Error) -> FqsymStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, FqsymStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(FqsymStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        FqsymStatus::InvalidUtf8
    })
}

unsafe fn read_elem<'a>(p: *const FqsymElement) -> Result<&'a FqsymElement, FqsymStatus> {
    p.as_ref().ok_or_else(|| {
        set_error("null element handle");
        FqsymStatus::NullPointer
    })
}

fn check_out<T>(out: *mut T) -> Result<(), FqsymStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(FqsymStatus::NullPointer);
    }
    Ok(())
}

fn bound(n: usize) -> Result<(), FqsymStatus> {
    if n > FQSYM_MAX_N {
        return Err(fail(Error::BoundExceeded { n, max: FQSYM_MAX_N }));
    }
    Ok(())
}

unsafe fn give_elem(out: *mut *mut FqsymElement, inner: TaggedElem) {
    *out = Box::into_raw(Box::new(FqsymElement { inner }));
}

unsafe fn give_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("JSON has no interior NUL").into_raw();
}

/// Parses an element from JSON or the text form `2*S[4132] - S[21]`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_parse(text: *const c_char, out: *mut *mut FqsymElement) -> FqsymStatus {
    guard(|| {
        check_out(out)?;
        let x = TaggedElem::parse(read_str(text)?).map_err(fail)?;
        bound(x.max_size())?;
        give_elem(out, x);
        Ok(())
    })
}

/// The basis element `basis_σ`, expanded on `G` or `F`.
///
/// # Safety
/// `basis` and `perm` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_expand(
    basis: *const c_char,
    perm: *const c_char,
    out: *mut *mut FqsymElement,
) -> FqsymStatus {
    guard(|| {
        check_out(out)?;
        let tag: BasisTag = read_str(basis)?.parse().map_err(fail)?;
        let sigma: Permutation = read_str(perm)?.parse().map_err(fail)?;
        bound(sigma.size())?;
        let x = expand(tag, &sigma).map_err(fail)?;
        give_elem(
            out,
            TaggedElem::from_fqsym(&x, BasisTag::from(tag.native())).map_err(fail)?,
        );
        Ok(())
    })
}

/// Rewrites `elem` on the basis named `basis`.
///
/// # Safety
/// `elem` must be a live handle, `basis` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_convert(
    elem: *const FqsymElement,
    basis: *const c_char,
    out: *mut *mut FqsymElement,
) -> FqsymStatus {
    guard(|| {
        check_out(out)?;
        let x = read_elem(elem)?;
        let tag: BasisTag = read_str(basis)?.parse().map_err(fail)?;
        let y = x
            .inner
            .to_fqsym()
            .and_then(|v| TaggedElem::from_fqsym(&v, tag))
            .map_err(fail)?;
        give_elem(out, y);
        Ok(())
    })
}

/// Product `a · b`, written on the basis of `a`.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_product(
    a: *const FqsymElement,
    b: *const FqsymElement,
    out: *mut *mut FqsymElement,
) -> FqsymStatus {
    guard(|| {
        check_out(out)?;
        let (x, y) = (read_elem(a)?, read_elem(b)?);
        bound(x.inner.max_size() + y.inner.max_size())?;
        let p = x
            .inner
            .to_fqsym()
            .and_then(|u| y.inner.to_fqsym().map(|v| u.product(&v)))
            .and_then(|p| TaggedElem::from_fqsym(&p, x.inner.tag))
            .map_err(fail)?;
        give_elem(out, p);
        Ok(())
    })
}

/// Writes `{ "basis": ..., "terms": [...] }`.
///
/// # Safety
/// `elem` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_to_json(elem: *const FqsymElement, out: *mut *mut c_char) -> FqsymStatus {
    guard(|| {
        check_out(out)?;
        give_string(out, read_elem(elem)?.inner.to_json_string());
        Ok(())
    })
}

/// Whether two handles denote the same combination on the same basis.
///
/// # Safety
/// `a` and `b` must be live handles or null; null handles compare unequal.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_equal(a: *const FqsymElement, b: *const FqsymElement) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(x), Some(y)) => x.inner == y.inner,
        _ => false,
    }
}

/// # Safety
/// `elem` must be null or a handle obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fqsym_element_free(elem: *mut FqsymElement) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// Transition matrix JSON: column σ holds the coefficients of `from_σ` on `to`.
///
/// # Safety
/// `from` and `to` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_matrix_json(
    from: *const c_char,
    to: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> FqsymStatus {
    guard(|| {
        check_out(out)?;
        let from: BasisTag = read_str(from)?.parse().map_err(fail)?;
        let to: BasisTag = read_str(to)?.parse().map_err(fail)?;
        bound(n)?;
        let m = transition_matrix(from, to, n).map_err(fail)?;
        give_string(
            out,
            serde_json::to_string(&m.to_json()).expect("matrix JSON is serializable"),
        );
        Ok(())
    })
}

/// Runs a verification suite at size `n`; `passed` receives the verdict and
/// `report` (if non-null) the JSON report.
///
/// # Safety
/// `suite` must be a NUL-terminated string, `passed` a valid pointer and
/// `report` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fqsym_verify(
    suite: *const c_char,
    n: usize,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> FqsymStatus {
    guard(|| {
        check_out(passed)?;
        let suite: Suite = read_str(suite)?.parse().map_err(fail)?;
        bound(n)?;
        let b = Bounds {
            max_n: n,
            degree: n.min(4),
            letters: (3, 3),
            moebius_n: n,
            seed: 0,
        };
        let reports = run_suite(suite, &b).map_err(fail)?;
        *passed = reports.iter().all(|r| r.passed);
        if !report.is_null() {
            give_string(
                report,
                serde_json::to_string(&reports).expect("reports are serializable"),
            );
        }
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. Release with `fqsym_string_free`.
#[no_mangle]
pub extern "C" fn fqsym_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fqsym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
