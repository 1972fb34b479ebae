//! C ABI for the core library.
//!
//! Conventions:
//! * Configurations travel through an opaque handle, `RlConfiguration`,
//!   created by the `rl_configuration_*` constructors and released with
//!   [`rl_configuration_free`].
//! * Every fallible call returns an [`RlStatus`]; `RL_STATUS_OK` is 0.
//!   On failure, [`rl_last_error_message`] returns a thread-local,
//!   NUL-terminated description of the most recent error.
//! * Structured results come back as JSON documents in newly allocated
//!   C strings (the same documents the CLI prints); release them with
//!   [`rl_string_free`]. Rationals inside documents are exact `p/q`
//!   strings.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use radon_link::document::{
    general_position_json, input_hash, parse_pointfile, write_pointfile, EnumerationDocument,
    ResultDocument,
};
use radon_link::error::Error;
use radon_link::generator::{gen_moment_curve, gen_random};
use radon_link::linalg::parse_rational;
use radon_link::oracle::{enumerate, EnumOptions};
use radon_link::sweep::find_partition;
use radon_link::verify::verify_certificate;
use radon_link::Configuration;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RlStatus {
    RlStatusOk = 0,
    RlStatusNullPointer = 1,
    RlStatusInvalidUtf8 = 2,
    RlStatusParseError = 3,
    RlStatusInvalidArgument = 4,
    RlStatusNotGeneralPosition = 5,
    RlStatusVerificationFailed = 6,
    RlStatusInternalDefect = 7,
}

/// Opaque handle to a point configuration.
pub struct RlConfiguration {
    inner: Configuration,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> RlStatus {
    match err {
        Error::Parse { .. } | Error::Document(_) => RlStatus::RlStatusParseError,
        Error::NotGeneralPosition(_) => RlStatus::RlStatusNotGeneralPosition,
        Error::TheoremViolation(_) | Error::Degenerate(_) => RlStatus::RlStatusInternalDefect,
        _ => RlStatus::RlStatusInvalidArgument,
    }
}

fn report(err: Error) -> RlStatus {
    set_error(&err.to_string());
    status_of(&err)
}

/// Converts a borrowed C string; sets the error slot on failure.
unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, RlStatus> {
    if ptr.is_null() {
        set_error(&format!("{what} is NULL"));
        return Err(RlStatus::RlStatusNullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        RlStatus::RlStatusInvalidUtf8
    })
}

fn give_string(out: *mut *mut c_char, text: String) -> RlStatus {
    if out.is_null() {
        set_error("output pointer is NULL");
        return RlStatus::RlStatusNullPointer;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            RlStatus::RlStatusOk
        }
        Err(_) => {
            set_error("document contains an interior NUL byte");
            RlStatus::RlStatusInternalDefect
        }
    }
}

fn give_configuration(out: *mut *mut RlConfiguration, c: Configuration) -> RlStatus {
    if out.is_null() {
        set_error("output pointer is NULL");
        return RlStatus::RlStatusNullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(RlConfiguration { inner: c })) };
    RlStatus::RlStatusOk
}

unsafe fn borrow_configuration<'a>(
    handle: *const RlConfiguration,
) -> Result<&'a Configuration, RlStatus> {
    if handle.is_null() {
        set_error("configuration handle is NULL");
        return Err(RlStatus::RlStatusNullPointer);
    }
    Ok(&(*handle).inner)
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn rl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the most recent error on this thread; valid until the
/// next failing call on the same thread. Do not free.
#[no_mangle]
pub extern "C" fn rl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Frees a string returned by any `rl_*` call.
///
/// # Safety
/// `s` must be a pointer previously returned through an `out` parameter
/// of this library, not yet freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn rl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a point file (the text format of the CLI) into a handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_configuration_parse(
    text: *const c_char,
    out: *mut *mut RlConfiguration,
) -> RlStatus {
    let text = match read_str(text, "point file text") {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_pointfile(text) {
        Ok(c) => give_configuration(out, c),
        Err(e) => report(e),
    }
}

/// Generates the seeded random configuration with integer coordinates
/// in `[-bound, bound]^n`, rejection-sampled to general position.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_configuration_generate_random(
    n: u32,
    seed: u64,
    bound: i64,
    out: *mut *mut RlConfiguration,
) -> RlStatus {
    match gen_random(n as usize, seed, bound) {
        Ok(c) => give_configuration(out, c),
        Err(e) => report(e),
    }
}

/// Builds the moment-curve configuration on comma-separated, strictly
/// increasing rational parameters (exactly n+3 of them).
///
/// # Safety
/// `params` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_configuration_generate_moment(
    n: u32,
    params: *const c_char,
    out: *mut *mut RlConfiguration,
) -> RlStatus {
    let raw = match read_str(params, "moment parameters") {
        Ok(t) => t,
        Err(s) => return s,
    };
    let parsed: Result<Vec<_>, String> = raw.split(',').map(parse_rational).collect();
    match parsed {
        Ok(ts) => match gen_moment_curve(n as usize, &ts) {
            Ok(c) => give_configuration(out, c),
            Err(e) => report(e),
        },
        Err(msg) => {
            set_error(&format!("bad moment parameter: {msg}"));
            RlStatus::RlStatusInvalidArgument
        }
    }
}

/// Releases a configuration handle; NULL is ignored.
///
/// # Safety
/// `handle` must come from a constructor of this library and must not
/// be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rl_configuration_free(handle: *mut RlConfiguration) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Renders the canonical point-file text for a handle.
///
/// # Safety
/// `handle` must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_configuration_to_pointfile(
    handle: *const RlConfiguration,
    out: *mut *mut c_char,
) -> RlStatus {
    let c = match borrow_configuration(handle) {
        Ok(c) => c,
        Err(s) => return s,
    };
    give_string(out, write_pointfile(c, None))
}

/// General-position report as a JSON document `{ok, violation?}` with
/// 1-based point labels. Returns OK even for degenerate configurations;
/// inspect the document.
///
/// # Safety
/// `handle` must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_check_general_position(
    handle: *const RlConfiguration,
    out: *mut *mut c_char,
) -> RlStatus {
    let c = match borrow_configuration(handle) {
        Ok(c) => c,
        Err(s) => return s,
    };
    give_string(out, general_position_json(&c.check_general_position()))
}

/// Runs the partition search appropriate for the dimension's parity,
/// verifies the certificate, and returns the result document JSON.
///
/// # Safety
/// `handle` must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_find(
    handle: *const RlConfiguration,
    out: *mut *mut c_char,
) -> RlStatus {
    let c = match borrow_configuration(handle) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let result = match find_partition(c) {
        Ok(r) => r,
        Err(e) => return report(e),
    };
    let verified = match verify_certificate(c, &result) {
        Ok(v) => v,
        Err(e) => return report(e),
    };
    if !verified {
        set_error("freshly produced certificate failed verification");
        return RlStatus::RlStatusInternalDefect;
    }
    give_string(out, ResultDocument::new(c, &result, verified).to_json())
}

/// Re-checks a result document (JSON text) against a configuration.
/// `RL_STATUS_OK` means the document describes this input and its
/// certificate re-derives exactly.
///
/// # Safety
/// `handle` must be valid and `result_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn rl_verify(
    handle: *const RlConfiguration,
    result_json: *const c_char,
) -> RlStatus {
    let c = match borrow_configuration(handle) {
        Ok(c) => c,
        Err(s) => return s,
    };
    let text = match read_str(result_json, "result document") {
        Ok(t) => t,
        Err(s) => return s,
    };
    if let Err(e) = c.require_general_position() {
        return report(e);
    }
    let doc = match ResultDocument::from_json(text) {
        Ok(d) => d,
        Err(e) => return report(e),
    };
    if doc.input_sha256 != input_hash(c) || doc.n != c.dim() {
        set_error("result does not describe this input");
        return RlStatus::RlStatusVerificationFailed;
    }
    match verify_certificate(c, &doc.to_partition_result()) {
        Ok(true) => RlStatus::RlStatusOk,
        Ok(false) => {
            set_error("certificate recomputation failed");
            RlStatus::RlStatusVerificationFailed
        }
        Err(e) => report(e),
    }
}

/// Brute-force enumeration of all qualifying pairs, as the enumeration
/// document JSON. `max_n` bounds the dimension the enumeration will
/// attempt (the CLI default is 8).
///
/// # Safety
/// `handle` must be valid and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rl_enumerate(
    handle: *const RlConfiguration,
    max_n: u32,
    out: *mut *mut c_char,
) -> RlStatus {
    let c = match borrow_configuration(handle) {
        Ok(c) => c,
        Err(s) => return s,
    };
    match enumerate(c, &EnumOptions { max_n: max_n as usize }) {
        Ok(report) => give_string(out, EnumerationDocument::new(c, report).to_json()),
        Err(e) => report(e),
    }
}
