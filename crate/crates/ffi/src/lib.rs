//! C ABI for the lattice library: opaque handles, status codes, and JSON
//! in/out for structured data. The header is generated into
//! `include/latticelab.h` at build time.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use latticelab::analysis::{run_analysis, Check};
use latticelab::error::LatticeError;
use latticelab::io::{to_canonical_json, FileError, LatticeFile};
use latticelab::lattice::Lattice;
use latticelab::{gallery, OrthoLattice};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LlStatus {
    LlOk = 0,
    /// The input is structurally well-formed but semantically invalid.
    LlValidation = 1,
    /// A configured budget was exceeded.
    LlBudget = 2,
    /// The input could not be parsed.
    LlParse = 3,
    /// A required pointer argument was null.
    LlNullPointer = 4,
}

/// Opaque lattice handle. Created by `ll_lattice_from_json` or
/// `ll_gallery`; released with `ll_lattice_free`.
pub struct LlLattice {
    lattice: Lattice,
    perp: Option<Vec<usize>>,
}

fn status_of(e: &FileError) -> LlStatus {
    match e {
        FileError::Lattice(LatticeError::BudgetExceeded { .. }) => LlStatus::LlBudget,
        FileError::Lattice(_) => LlStatus::LlValidation,
        _ => LlStatus::LlParse,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ll_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parses a `lattice-v1` JSON document into a lattice handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_from_json(
    json: *const c_char,
    out: *mut *mut LlLattice,
) -> LlStatus {
    if json.is_null() || out.is_null() {
        return LlStatus::LlNullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    let text = match unsafe { CStr::from_ptr(json) }.to_str() {
        Ok(t) => t,
        Err(_) => return LlStatus::LlParse,
    };
    let file: LatticeFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(_) => return LlStatus::LlParse,
    };
    match file.to_lattice() {
        Ok((lattice, _)) => {
            let handle = Box::new(LlLattice { lattice, perp: file.perp });
            unsafe { *out = Box::into_raw(handle) };
            LlStatus::LlOk
        }
        Err(e) => status_of(&e),
    }
}

/// Builds a stock lattice. `kind` is one of "chain", "mn", "boolean", "mo",
/// "n5"; `param` is the size / atom count / pair count (ignored for "n5").
///
/// # Safety
/// `kind` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_gallery(
    kind: *const c_char,
    param: usize,
    out: *mut *mut LlLattice,
) -> LlStatus {
    if kind.is_null() || out.is_null() {
        return LlStatus::LlNullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    let kind = match unsafe { CStr::from_ptr(kind) }.to_str() {
        Ok(k) => k,
        Err(_) => return LlStatus::LlParse,
    };
    let built: Result<(Lattice, Option<Vec<usize>>), LatticeError> = match kind {
        "chain" if param >= 1 => gallery::chain(param).map(|l| (l, None)),
        "mn" if param >= 1 => gallery::make_mn(param).map(|l| (l, None)),
        "n5" => Ok((gallery::make_n5(), None)),
        "boolean" => gallery::make_boolean(param).map(split_ortho),
        "mo" if param >= 1 => gallery::make_mo(param).map(split_ortho),
        _ => return LlStatus::LlValidation,
    };
    match built {
        Ok((lattice, perp)) => {
            unsafe { *out = Box::into_raw(Box::new(LlLattice { lattice, perp })) };
            LlStatus::LlOk
        }
        Err(LatticeError::BudgetExceeded { .. }) => LlStatus::LlBudget,
        Err(_) => LlStatus::LlValidation,
    }
}

fn split_ortho(o: OrthoLattice) -> (Lattice, Option<Vec<usize>>) {
    let perp = o.perp_table().to_vec();
    (o.into_lattice(), Some(perp))
}

/// Releases a lattice handle. Null is ignored.
///
/// # Safety
/// `lattice` must be null or a handle produced by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_free(lattice: *mut LlLattice) {
    if !lattice.is_null() {
        drop(unsafe { Box::from_raw(lattice) });
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `lattice` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_len(lattice: *const LlLattice) -> usize {
    match unsafe { lattice.as_ref() } {
        Some(h) => h.lattice.len(),
        None => 0,
    }
}

unsafe fn binary_op(
    lattice: *const LlLattice,
    a: usize,
    b: usize,
    out: *mut usize,
    op: impl Fn(&Lattice, usize, usize) -> usize,
) -> LlStatus {
    let Some(h) = (unsafe { lattice.as_ref() }) else {
        return LlStatus::LlNullPointer;
    };
    if out.is_null() {
        return LlStatus::LlNullPointer;
    }
    if a >= h.lattice.len() || b >= h.lattice.len() {
        return LlStatus::LlValidation;
    }
    unsafe { *out = op(&h.lattice, a, b) };
    LlStatus::LlOk
}

/// Order test: writes 1 to `out` when a <= b, else 0.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_leq(
    lattice: *const LlLattice,
    a: usize,
    b: usize,
    out: *mut usize,
) -> LlStatus {
    unsafe { binary_op(lattice, a, b, out, |l, a, b| l.leq(a, b) as usize) }
}

/// Greatest lower bound.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_meet(
    lattice: *const LlLattice,
    a: usize,
    b: usize,
    out: *mut usize,
) -> LlStatus {
    unsafe { binary_op(lattice, a, b, out, Lattice::meet) }
}

/// Least upper bound.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_join(
    lattice: *const LlLattice,
    a: usize,
    b: usize,
    out: *mut usize,
) -> LlStatus {
    unsafe { binary_op(lattice, a, b, out, Lattice::join) }
}

/// Serializes the lattice back to canonical `lattice-v1` JSON. The string
/// must be released with `ll_string_free`.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_lattice_to_json(
    lattice: *const LlLattice,
    out: *mut *mut c_char,
) -> LlStatus {
    let Some(h) = (unsafe { lattice.as_ref() }) else {
        return LlStatus::LlNullPointer;
    };
    if out.is_null() {
        return LlStatus::LlNullPointer;
    }
    let file = LatticeFile::from_lattice(&h.lattice, h.perp.as_deref());
    let json = to_canonical_json(&file);
    unsafe { *out = CString::new(json).expect("no interior NUL").into_raw() };
    LlStatus::LlOk
}

/// Runs the full analysis (width, height, distributivity, simplicity,
/// Wille's property, the completeness verdict) and returns the JSON report.
/// The string must be released with `ll_string_free`.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ll_analyze_json(
    lattice: *const LlLattice,
    out: *mut *mut c_char,
) -> LlStatus {
    let Some(h) = (unsafe { lattice.as_ref() }) else {
        return LlStatus::LlNullPointer;
    };
    if out.is_null() {
        return LlStatus::LlNullPointer;
    }
    match run_analysis(&h.lattice, &Check::ALL) {
        Ok(report) => {
            let json = to_canonical_json(&report);
            unsafe { *out = CString::new(json).expect("no interior NUL").into_raw() };
            LlStatus::LlOk
        }
        Err(LatticeError::BudgetExceeded { .. }) => LlStatus::LlBudget,
        Err(_) => LlStatus::LlValidation,
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string produced by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ll_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
