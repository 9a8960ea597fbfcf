//! C ABI for `lgr-core`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and released with
//! the matching `*_free`. Rationals travel as `"p/q"` strings. Every fallible call
//! returns an [`LgrStatus`]; on failure [`lgr_last_error`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lgr_core::grassmann::{lagrange_map, Subspace};
use lgr_core::hyperdet::core_residuals;
use lgr_core::residual::all_zero;
use lgr_core::tau::{ckp_residual, tau_from_affine, TauPoly};
use lgr_core::{Error, Rat, RatMatrix};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LgrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotSymmetric = 4,
    Dimension = 5,
    InvalidArgument = 6,
    Evaluation = 7,
    Panic = 8,
}

/// A square rational matrix.
pub struct LgrMatrix(RatMatrix);

/// A polynomial τ-function together with the plane it came from.
pub struct LgrTau(TauPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(LgrStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotSymmetric => LgrStatus::NotSymmetric,
            Error::Parse(_) | Error::Json(_) => LgrStatus::Parse,
            Error::Dimension(_) | Error::RankDeficient { .. } => LgrStatus::Dimension,
            Error::Evaluation(_) | Error::DivisionByZero | Error::SeriesUndefined => LgrStatus::Evaluation,
            _ => LgrStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LgrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LgrStatus::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            LgrStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(LgrStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(LgrStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(LgrStatus::NullPointer, format!("{what} is null")))
}

fn out_ptr<T>(out: *mut T) -> Result<(), Fail> {
    if out.is_null() {
        Err(Fail(LgrStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// The message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn lgr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn lgr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lgr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a JSON array of rows, entries as integers or `"p/q"` strings.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lgr_matrix_from_json(json: *const c_char, out: *mut *mut LgrMatrix) -> LgrStatus {
    guard(|| {
        out_ptr(out)?;
        let s = str_arg(json, "json")?;
        let m: RatMatrix = serde_json::from_str(s).map_err(|e| Fail(LgrStatus::Parse, e.to_string()))?;
        if !m.is_square() {
            return Err(Fail(LgrStatus::Dimension, format!("matrix is {}x{}", m.rows(), m.cols())));
        }
        *out = Box::into_raw(Box::new(LgrMatrix(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must come from [`lgr_matrix_from_json`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lgr_matrix_free(m: *mut LgrMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Side length of a matrix, 0 for null.
///
/// # Safety
/// `m` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn lgr_matrix_size(m: *const LgrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// All principal minors as a JSON object keyed by subset (`""`, `"1"`, ..., `"12...N"`).
///
/// # Safety
/// `m` must be a live handle; `out` must be writable. Free the result with [`lgr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lgr_principal_minors_json(m: *const LgrMatrix, out: *mut *mut c_char) -> LgrStatus {
    guard(|| {
        out_ptr(out)?;
        let a = &handle(m, "matrix")?.0;
        let l = lagrange_map(&Subspace::from_affine(a)?)?;
        *out = to_c(serde_json::to_string(&l).map_err(Error::from)?);
        Ok(())
    })
}

/// Sets `*pass` to whether every core hyperdeterminantal relation holds for the minors of `m`.
///
/// # Safety
/// `m` must be a live handle; `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lgr_check_hyperdet(m: *const LgrMatrix, pass: *mut bool) -> LgrStatus {
    guard(|| {
        out_ptr(pass)?;
        let a = &handle(m, "matrix")?.0;
        let l = lagrange_map(&Subspace::from_affine(a)?)?;
        *pass = all_zero(&core_residuals(&l));
        Ok(())
    })
}

/// τ of the big-cell plane with affine coordinates `m`; CKP exactly when `m` is symmetric.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lgr_tau_from_matrix(m: *const LgrMatrix, out: *mut *mut LgrTau) -> LgrStatus {
    guard(|| {
        out_ptr(out)?;
        let tau = tau_from_affine(&handle(m, "matrix")?.0)?;
        *out = Box::into_raw(Box::new(LgrTau(tau)));
        Ok(())
    })
}

/// Parses `{"n", "m", "plucker": [{"lambda", "c"}, ...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lgr_tau_from_json(json: *const c_char, out: *mut *mut LgrTau) -> LgrStatus {
    guard(|| {
        out_ptr(out)?;
        let tau: TauPoly = serde_json::from_str(str_arg(json, "json")?).map_err(|e| Fail(LgrStatus::Parse, e.to_string()))?;
        *out = Box::into_raw(Box::new(LgrTau(tau)));
        Ok(())
    })
}

/// # Safety
/// `t` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn lgr_tau_free(t: *mut LgrTau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `out` must be writable. Free the result with [`lgr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lgr_tau_to_json(t: *const LgrTau, out: *mut *mut c_char) -> LgrStatus {
    guard(|| {
        out_ptr(out)?;
        *out = to_c(serde_json::to_string(&handle(t, "tau")?.0).map_err(Error::from)?);
        Ok(())
    })
}

/// `τ(t_1, ..., t_len)` with the times given as `"p/q"` strings.
///
/// # Safety
/// `times` must point to `len` nul-terminated strings (or be null with `len == 0`);
/// `out` must be writable. Free the result with [`lgr_string_free`].
#[no_mangle]
pub unsafe extern "C" fn lgr_tau_eval(
    t: *const LgrTau,
    times: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> LgrStatus {
    guard(|| {
        out_ptr(out)?;
        let tau = &handle(t, "tau")?.0;
        if times.is_null() && len > 0 {
            return Err(Fail(LgrStatus::NullPointer, "times is null".into()));
        }
        let mut pt = Vec::with_capacity(len);
        for i in 0..len {
            let s = str_arg(*times.add(i), "time")?;
            pt.push(s.parse::<Rat>()?);
        }
        *out = to_c(tau.eval(&pt).to_string());
        Ok(())
    })
}

/// Sets `*pass` to whether τ is even under `t_2k -> -t_2k` with vanishing even derivatives.
///
/// # Safety
/// `t` must be a live handle; `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lgr_tau_is_ckp(t: *const LgrTau, pass: *mut bool) -> LgrStatus {
    guard(|| {
        out_ptr(pass)?;
        *pass = ckp_residual(&handle(t, "tau")?.0).is_zero();
        Ok(())
    })
}

/// Runs the `lgr` command line with `argv[0..argc]` and returns its exit code.
///
/// # Safety
/// `argv` must point to `argc` nul-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn lgr_cli_main(argc: c_int, argv: *const *const c_char) -> c_int {
    let mut args = Vec::new();
    if argc > 0 && argv.is_null() {
        set_error("argv is null".into());
        return 2;
    }
    for i in 0..argc.max(0) as usize {
        match str_arg(*argv.add(i), "argument") {
            Ok(s) => args.push(s.to_string()),
            Err(Fail(_, msg)) => {
                set_error(msg);
                return 2;
            }
        }
    }
    catch_unwind(|| lgr_core::cli::main_with_args(args)).unwrap_or_else(|_| {
        set_error("internal panic".into());
        2
    })
}
