//! C ABI over the `quintic-gw` engine.
//!
//! Rationals cross the boundary as NUL-terminated `"p/q"` strings and pair
//! sets as JSON text such as `[[3,0],[1,0]]`. Every string handed out must be
//! released with `qgw_string_free`; handles with their own `*_free`.
//! Functions return a `QgwStatus`; on failure `qgw_last_error` describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quintic_gw::closed_forms::{b_value, c_master};
use quintic_gw::driver::{n_g0, solve_ngd, EquationInputs};
use quintic_gw::fiber::{fiber_connected, FiberSpec, Insertion};
use quintic_gw::pairs::{GdKey, PairSet};
use quintic_gw::solver::{solve_crho, CoefficientSolution};
use quintic_gw::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QgwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Argument = 3,
    Precondition = 4,
    FormulaHypothesis = 5,
    UnsupportedShape = 6,
    ResourceLimit = 7,
    MissingInput = 8,
    Degenerate = 9,
    Parse = 10,
    Integrity = 11,
    Identity = 12,
    Io = 13,
    OutOfRange = 14,
    Panic = 15,
}

/// Parsed A/NPT inputs for one `(g, d)`.
pub struct QgwInputs(EquationInputs);

/// A sparse `C_rho` map, iterated in canonical order.
pub struct QgwSolution {
    entries: Vec<(String, String)>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(QgwStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Argument(_) => QgwStatus::Argument,
            Error::Precondition(_) => QgwStatus::Precondition,
            Error::FormulaHypothesisViolated(_) => QgwStatus::FormulaHypothesis,
            Error::UnsupportedShape(_) => QgwStatus::UnsupportedShape,
            Error::ResourceLimit(_) => QgwStatus::ResourceLimit,
            Error::MissingInput(_) => QgwStatus::MissingInput,
            Error::Degenerate(_) => QgwStatus::Degenerate,
            Error::Parse { .. } => QgwStatus::Parse,
            Error::Integrity(_) => QgwStatus::Integrity,
            Error::Identity(_) => QgwStatus::Identity,
            Error::Io { .. } => QgwStatus::Io,
        };
        Fail(code, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QgwStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QgwStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            QgwStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(QgwStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(QgwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Fail> {
    serde_json::from_str(text).map_err(|e| Fail(QgwStatus::Parse, format!("bad {what}: {e}")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).map_err(|e| Fail(QgwStatus::Argument, e.to_string()))?.into_raw();
    Ok(())
}

/// Copy of the last error message on this thread, or NULL. Free with
/// `qgw_string_free`.
#[no_mangle]
pub extern "C" fn qgw_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn qgw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Degree-zero invariant `N_{g,0}` for Euler characteristic `chi`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_n_g0(genus: u32, chi: i64, out: *mut *mut c_char) -> QgwStatus {
    guard(|| write_string(out, n_g0(genus, chi)?.to_string()))
}

/// Connected fiber invariant. `insertions_json` is `[[n,l],...]`.
///
/// # Safety
/// `insertions_json` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_fiber_connected(
    mu: u64,
    rel_power: u32,
    insertions_json: *const c_char,
    out: *mut *mut c_char,
) -> QgwStatus {
    guard(|| {
        let raw: Vec<[u32; 2]> = parse_json(read_str(insertions_json, "insertions")?, "insertions")?;
        let ins = raw.into_iter().map(|[n, l]| Insertion::new(n, l)).collect();
        let v = fiber_connected(&FiberSpec::new(mu, rel_power, ins)?)?;
        write_string(out, v.to_string())
    })
}

/// Closed-form master coefficient for genus 2 or 3.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_c_master(genus: u32, degree: u32, out: *mut *mut c_char) -> QgwStatus {
    guard(|| write_string(out, c_master(genus, degree)?.to_string()))
}

/// Closed-form `B(zeta)`.
///
/// # Safety
/// `zeta_json` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_b_value(
    genus: u32,
    degree: u32,
    zeta_json: *const c_char,
    out: *mut *mut c_char,
) -> QgwStatus {
    guard(|| {
        let key = GdKey::new(genus, degree)?;
        let zeta: PairSet = parse_json(read_str(zeta_json, "zeta")?, "zeta")?;
        write_string(out, b_value(key, &zeta)?.to_string())
    })
}

/// Solves for the `C_rho` coefficients of `zeta`.
///
/// # Safety
/// `zeta_json` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_solve_crho(
    genus: u32,
    degree: u32,
    zeta_json: *const c_char,
    out: *mut *mut QgwSolution,
) -> QgwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let key = GdKey::new(genus, degree)?;
        let zeta: PairSet = parse_json(read_str(zeta_json, "zeta")?, "zeta")?;
        let sol: CoefficientSolution = solve_crho(key, &zeta)?;
        let entries = sol
            .coeffs
            .iter()
            .map(|(rho, c)| (rho.to_json_string(), c.to_string()))
            .collect();
        *out = Box::into_raw(Box::new(QgwSolution { entries }));
        Ok(())
    })
}

/// Number of nonzero coefficients, or 0 for NULL.
///
/// # Safety
/// `sol` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qgw_solution_len(sol: *const QgwSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.entries.len())
}

/// Entry `index` as a JSON pair set and a rational string.
///
/// # Safety
/// `sol` must be a live handle; `rho_out` and `coeff_out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qgw_solution_entry(
    sol: *const QgwSolution,
    index: usize,
    rho_out: *mut *mut c_char,
    coeff_out: *mut *mut c_char,
) -> QgwStatus {
    guard(|| {
        let s = sol.as_ref().ok_or_else(|| null("solution"))?;
        let (rho, c) = s.entries.get(index).ok_or_else(|| {
            Fail(QgwStatus::OutOfRange, format!("index {index} out of {}", s.entries.len()))
        })?;
        if rho_out.is_null() || coeff_out.is_null() {
            return Err(null("output pointer"));
        }
        write_string(rho_out, rho.clone())?;
        write_string(coeff_out, c.clone())
    })
}

/// # Safety
/// `sol` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qgw_solution_free(sol: *mut QgwSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}

/// Parses an A/NPT input document.
///
/// # Safety
/// `json` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_inputs_from_json(json: *const c_char, out: *mut *mut QgwInputs) -> QgwStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let inputs = EquationInputs::from_json_str(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(QgwInputs(inputs)));
        Ok(())
    })
}

/// Genus and degree the inputs were written for.
///
/// # Safety
/// `inputs` must be a live handle; `genus` and `degree` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qgw_inputs_key(inputs: *const QgwInputs, genus: *mut u32, degree: *mut u32) -> QgwStatus {
    guard(|| {
        let inp = inputs.as_ref().ok_or_else(|| null("inputs"))?;
        if genus.is_null() || degree.is_null() {
            return Err(null("output pointer"));
        }
        *genus = inp.0.key.g;
        *degree = inp.0.key.d;
        Ok(())
    })
}

/// Solves the master equation for `N_{g,d}`.
///
/// # Safety
/// `inputs` must be a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qgw_solve_ngd(inputs: *const QgwInputs, out: *mut *mut c_char) -> QgwStatus {
    guard(|| {
        let inp = inputs.as_ref().ok_or_else(|| null("inputs"))?;
        write_string(out, solve_ngd(inp.0.key, &inp.0)?.to_string())
    })
}

/// # Safety
/// `inputs` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qgw_inputs_free(inputs: *mut QgwInputs) {
    if !inputs.is_null() {
        drop(Box::from_raw(inputs));
    }
}
