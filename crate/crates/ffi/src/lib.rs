//! C ABI for argkit.
//!
//! Frameworks cross the boundary as opaque `ArgkitFramework` handles created
//! by the `argkit_framework_from_*` and `argkit_reduce` functions and released
//! with `argkit_framework_free`. Strings returned through out-pointers are
//! owned by the caller and released with `argkit_string_free`. Every fallible
//! function returns an `ArgkitStatus`; on failure `argkit_last_error` gives a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use argkit::error::Error;
use argkit::framework::Framework;
use argkit::graph_classes::{self, GraphClass};
use argkit::io;
use argkit::logic::MinsatInstance;
use argkit::reductions::{self, Variant};
use argkit::semantics::{self, Semantics};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgkitStatus {
    Ok = 0,
    Usage = 1,
    Parse = 2,
    Capacity = 3,
    Io = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Opaque framework handle.
pub struct ArgkitFramework {
    inner: Framework,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

enum Failure {
    Core(Error),
    Null(&'static str),
    Utf8(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn status_of(failure: Failure) -> ArgkitStatus {
    match failure {
        Failure::Core(e) => {
            let status = match &e {
                Error::Usage(_) => ArgkitStatus::Usage,
                Error::Parse { .. } => ArgkitStatus::Parse,
                Error::Capacity(_) | Error::DistanceBudget { .. } => ArgkitStatus::Capacity,
                Error::Io(_) => ArgkitStatus::Io,
            };
            set_last_error(e.to_string());
            status
        }
        Failure::Null(what) => {
            set_last_error(format!("{what} is NULL"));
            ArgkitStatus::NullPointer
        }
        Failure::Utf8(what) => {
            set_last_error(format!("{what} is not valid UTF-8"));
            ArgkitStatus::InvalidUtf8
        }
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> ArgkitStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ArgkitStatus::Ok,
        Ok(Err(failure)) => status_of(failure),
        Err(_) => {
            set_last_error("internal panic".to_string());
            ArgkitStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8(what))
}

unsafe fn handle<'a>(p: *const ArgkitFramework) -> Result<&'a Framework, Failure> {
    p.as_ref().map(|h| &h.inner).ok_or(Failure::Null("framework"))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("generated text has no NUL bytes").into_raw()
}

fn boxed(f: Framework) -> *mut ArgkitFramework {
    Box::into_raw(Box::new(ArgkitFramework { inner: f }))
}

fn parse_name<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    s.parse().map_err(Failure::Core)
}

/// Message describing the last failure on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn argkit_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses APX text into a new framework handle.
///
/// # Safety
/// `apx` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn argkit_framework_from_apx(apx: *const c_char, out: *mut *mut ArgkitFramework) -> ArgkitStatus {
    guard(|| {
        let f = io::parse_apx(text(apx, "apx")?)?;
        write_out(out, boxed(f), "out")
    })
}

/// Parses TGF text into a new framework handle.
///
/// # Safety
/// `tgf` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn argkit_framework_from_tgf(tgf: *const c_char, out: *mut *mut ArgkitFramework) -> ArgkitStatus {
    guard(|| {
        let f = io::parse_tgf(text(tgf, "tgf")?)?;
        write_out(out, boxed(f), "out")
    })
}

/// Releases a framework handle. NULL is ignored.
///
/// # Safety
/// `framework` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn argkit_framework_free(framework: *mut ArgkitFramework) {
    if !framework.is_null() {
        drop(Box::from_raw(framework));
    }
}

/// Number of arguments, 0 for NULL.
///
/// # Safety
/// `framework` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn argkit_framework_len(framework: *const ArgkitFramework) -> usize {
    framework.as_ref().map_or(0, |h| h.inner.len())
}

/// Canonical APX text of a framework.
///
/// # Safety
/// `framework` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn argkit_framework_to_apx(framework: *const ArgkitFramework, out: *mut *mut c_char) -> ArgkitStatus {
    guard(|| {
        let apx = io::emit_apx(handle(framework)?);
        write_out(out, owned_string(apx), "out")
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn argkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// All extensions under `semantics` (`cf`, `naive`, `adm`, `stb`, `com`,
/// `grd`, `prf`, `stg`, `sem`), one `[a,b]` line each.
///
/// # Safety
/// `framework` must be a live handle, `semantics` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn argkit_extensions(
    framework: *const ArgkitFramework,
    semantics: *const c_char,
    out: *mut *mut c_char,
) -> ArgkitStatus {
    guard(|| {
        let f = handle(framework)?;
        let sigma: Semantics = parse_name(text(semantics, "semantics")?)?;
        let exts = semantics::extensions(f, sigma)?;
        let lines: String = exts.iter().map(|e| f.format_set(e) + "\n").collect();
        write_out(out, owned_string(lines), "out")
    })
}

/// Credulous (`skeptical == false`) or skeptical acceptance of `argument`.
///
/// # Safety
/// `framework` must be a live handle, the strings NUL-terminated and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn argkit_accept(
    framework: *const ArgkitFramework,
    semantics: *const c_char,
    argument: *const c_char,
    skeptical: bool,
    out: *mut bool,
) -> ArgkitStatus {
    guard(|| {
        let f = handle(framework)?;
        let sigma: Semantics = parse_name(text(semantics, "semantics")?)?;
        let arg = text(argument, "argument")?;
        let answer = if skeptical {
            semantics::skeptical(f, sigma, arg)?
        } else {
            semantics::credulous(f, sigma, arg)?
        };
        write_out(out, answer, "out")
    })
}

/// Membership in `graph_class` (`acy`, `noeven`, `bip`, `sym`).
///
/// # Safety
/// `framework` must be a live handle, `graph_class` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn argkit_is_member(
    framework: *const ArgkitFramework,
    graph_class: *const c_char,
    out: *mut bool,
) -> ArgkitStatus {
    guard(|| {
        let f = handle(framework)?;
        let class: GraphClass = parse_name(text(graph_class, "graph_class")?)?;
        write_out(out, graph_classes::is_member(f, class), "out")
    })
}

/// Exact distance to `graph_class`; `out_set` receives the certificate as `[a,b]`.
///
/// # Safety
/// `framework` must be a live handle, `graph_class` NUL-terminated and both out
/// pointers valid.
#[no_mangle]
pub unsafe extern "C" fn argkit_distance(
    framework: *const ArgkitFramework,
    graph_class: *const c_char,
    out_k: *mut usize,
    out_set: *mut *mut c_char,
) -> ArgkitStatus {
    guard(|| {
        let f = handle(framework)?;
        let class: GraphClass = parse_name(text(graph_class, "graph_class")?)?;
        if out_k.is_null() || out_set.is_null() {
            return Err(Failure::Null("out"));
        }
        let cert = graph_classes::distance(f, class)?;
        write_out(out_k, cert.k, "out_k")?;
        write_out(out_set, owned_string(f.format_set(&cert.deletion_set)), "out_set")
    })
}

/// Builds reduction `reduction` (1 to 6) from QDIMACS text, or from DIMACS
/// text plus `target` for reduction 5. `variant` is `literal` or
/// `repaired`; NULL selects `repaired`.
///
/// # Safety
/// `input` must be NUL-terminated, `variant` and `target` NULL or
/// NUL-terminated, and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn argkit_reduce(
    input: *const c_char,
    reduction: u8,
    variant: *const c_char,
    target: *const c_char,
    out: *mut *mut ArgkitFramework,
) -> ArgkitStatus {
    guard(|| {
        let input = text(input, "input")?;
        let variant: Variant = if variant.is_null() {
            Variant::default()
        } else {
            parse_name(text(variant, "variant")?)?
        };
        let art = if reduction == 5 {
            let target = io::dimacs_target(text(target, "target")?);
            let inst = MinsatInstance::new(io::parse_dimacs(input)?, &target)?;
            reductions::reduce5(&inst, variant)?
        } else {
            reductions::reduce_qbf(reduction, &io::parse_qdimacs(input)?, variant)?
        };
        write_out(out, boxed(art.framework), "out")
    })
}
