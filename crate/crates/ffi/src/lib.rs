//! C ABI over the cofrob library: opaque handles, integer status codes, and
//! strings for everything exact (rationals travel as `"num/den"`, never as
//! doubles).
//!
//! Conventions:
//! * every constructor has a matching `_free`; passing null to `_free` is a
//!   no-op;
//! * output parameters are written only when the return status is
//!   `COFROB_STATUS_OK`;
//! * returned strings are owned by the caller and must be released with
//!   [`cofrob_string_free`].
//!
//! The C header is generated into `include/cofrob.h` at build time.

use cofrob::format::{ComoduleFile, HopfFile, RMatrixFile};
use cofrob::fusion::{self, SimpleLabel};
use cofrob::hecke::HeckeSymmetry;
use cofrob::hopf::{self, Comodule, HopfAlgebra, IntegralSide};
use cofrob::poincare;
use cofrob::scalar::Scalar;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CofrobStatus {
    /// Success; output parameters are valid.
    Ok = 0,
    /// Input was well formed but the mathematics rejected it (failed axiom,
    /// singular operator, missing integral, non-simple comodule).
    MathFailure = 1,
    /// Malformed input: unreadable JSON, bad indices, invalid parameters.
    InvalidInput = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
}

/// Opaque handle to a Hecke symmetry.
pub struct CofrobHecke(HeckeSymmetry);

/// Opaque handle to a finite-dimensional Hopf algebra.
pub struct CofrobHopf(HopfAlgebra);

/// Opaque handle to a right comodule.
pub struct CofrobComodule(Comodule);

fn owned_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, CofrobStatus> {
    if p.is_null() {
        return Err(CofrobStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| CofrobStatus::InvalidInput)
}

macro_rules! try_ptr {
    ($p:expr) => {
        match unsafe { $p.as_ref() } {
            Some(r) => r,
            None => return CofrobStatus::NullPointer,
        }
    };
}

macro_rules! try_out {
    ($p:expr) => {
        match unsafe { $p.as_mut() } {
            Some(r) => r,
            None => return CofrobStatus::NullPointer,
        }
    };
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn cofrob_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn cofrob_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an R-matrix JSON document (same schema as the CLI files).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_from_json(
    json: *const c_char,
    out: *mut *mut CofrobHecke,
) -> CofrobStatus {
    let out = try_out!(out);
    let text = match str_arg(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parsed = match RMatrixFile::from_json(text) {
        Ok(f) => f,
        Err(_) => return CofrobStatus::InvalidInput,
    };
    match parsed.to_hecke() {
        Ok(h) => {
            *out = Box::into_raw(Box::new(CofrobHecke(h)));
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::InvalidInput,
    }
}

/// Builds the standard two-dimensional symmetry at the rational parameter
/// `q`, given as `"num/den"` (or a bare integer string).
///
/// # Safety
/// `q` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_manin_standard(
    q: *const c_char,
    out: *mut *mut CofrobHecke,
) -> CofrobStatus {
    let out = try_out!(out);
    let text = match str_arg(q) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let q: Scalar = match text.parse() {
        Ok(q) => q,
        Err(_) => return CofrobStatus::InvalidInput,
    };
    match HeckeSymmetry::manin_standard(q) {
        Ok(h) => {
            *out = Box::into_raw(Box::new(CofrobHecke(h)));
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::InvalidInput,
    }
}

/// # Safety
/// `h` must come from a cofrob constructor and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_free(h: *mut CofrobHecke) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Runs the three Hecke-symmetry checks, writing one flag per axiom.
///
/// # Safety
/// All pointers must be valid; flag outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_verify(
    h: *const CofrobHecke,
    ybe: *mut bool,
    hecke: *mut bool,
    closed: *mut bool,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let (ybe, hecke, closed) = (try_out!(ybe), try_out!(hecke), try_out!(closed));
    *ybe = h.0.verify_yang_baxter().holds;
    *hecke = h.0.verify_hecke_relation();
    *closed = h.0.verify_closed();
    CofrobStatus::Ok
}

/// The q-rank as a `"num/den"` string; fails when the half-dual is singular.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_q_rank(
    h: *const CofrobHecke,
    out: *mut *mut c_char,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let out = try_out!(out);
    match h.0.q_rank() {
        Ok(r) => {
            *out = owned_c_string(r.to_string());
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::MathFailure,
    }
}

/// Graded dimension of the quantum symmetric (`antisymmetric == false`) or
/// antisymmetric algebra in degree `n`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_graded_dim(
    h: *const CofrobHecke,
    antisymmetric: bool,
    n: u32,
    out: *mut u64,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let out = try_out!(out);
    let result = if antisymmetric {
        poincare::ext_dim(&h.0, n as usize)
    } else {
        poincare::sym_dim(&h.0, n as usize)
    };
    match result {
        Ok(d) => {
            *out = d as u64;
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::MathFailure,
    }
}

/// Birank-(1,1) verdict from the antisymmetric series up to `max_degree`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_birank11(
    h: *const CofrobHecke,
    max_degree: u32,
    out: *mut bool,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let out = try_out!(out);
    match poincare::detect_birank11(&h.0, max_degree as usize) {
        Ok((verdict, _)) => {
            *out = verdict;
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::MathFailure,
    }
}

/// Dimension of the comodule endomorphism algebra of the n-th tensor power.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hecke_commutant_dim(
    h: *const CofrobHecke,
    n: u32,
    out: *mut u64,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let out = try_out!(out);
    match cofrob::commutant::commutant_dim(&h.0, n as usize) {
        Ok(d) => {
            *out = d as u64;
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::InvalidInput,
    }
}

/// Dimension (1 or 2) of the simple comodule labelled `(m, n)`.
#[no_mangle]
pub extern "C" fn cofrob_label_dim(m: i64, n: i64) -> u64 {
    SimpleLabel::new(m, n).dim()
}

/// Whether the label `(m, n)` names a splitting (typical) comodule.
#[no_mangle]
pub extern "C" fn cofrob_label_is_splitting(m: i64, n: i64) -> bool {
    SimpleLabel::new(m, n).is_splitting()
}

/// Tensor decomposition of `(m,n) (x) (p,q)` as a JSON string, in the same
/// schema as `cofrob fusion mul --json`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_fusion_mul_json(
    m: i64,
    n: i64,
    p: i64,
    q: i64,
    out: *mut *mut c_char,
) -> CofrobStatus {
    let out = try_out!(out);
    let d = fusion::tensor(SimpleLabel::new(m, n), SimpleLabel::new(p, q));
    let value = match &d {
        fusion::TensorDecomposition::Semisimple(parts) => serde_json::json!({
            "kind": "semisimple",
            "summands": parts
                .iter()
                .map(|(l, c)| serde_json::json!({"label": [l.m, l.n], "mult": c}))
                .collect::<Vec<_>>(),
        }),
        fusion::TensorDecomposition::IndecomposableInjective { socle, factors } => {
            serde_json::json!({
                "kind": "indecomposable_injective",
                "socle": [socle.m, socle.n],
                "factors": factors
                    .terms()
                    .map(|(l, c)| serde_json::json!({"label": [l.m, l.n], "mult": c}))
                    .collect::<Vec<_>>(),
            })
        }
    };
    *out = owned_c_string(value.to_string());
    CofrobStatus::Ok
}

/// Parses a Hopf-algebra JSON document (CLI schema). The handle is created
/// even when the axioms fail; run [`cofrob_hopf_validate`] to check them.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hopf_from_json(
    json: *const c_char,
    out: *mut *mut CofrobHopf,
) -> CofrobStatus {
    let out = try_out!(out);
    let text = match str_arg(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parsed = match HopfFile::from_json(text) {
        Ok(f) => f,
        Err(_) => return CofrobStatus::InvalidInput,
    };
    match parsed.to_hopf() {
        Ok(h) => {
            *out = Box::into_raw(Box::new(CofrobHopf(h)));
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::InvalidInput,
    }
}

/// # Safety
/// `h` must come from a cofrob constructor and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hopf_free(h: *mut CofrobHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Checks the Hopf axioms. Returns `MathFailure` on the first failing axiom
/// and writes its name to `failed_axiom` (caller frees); writes null on pass.
///
/// # Safety
/// `h` must be a live handle; `failed_axiom` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hopf_validate(
    h: *const CofrobHopf,
    failed_axiom: *mut *mut c_char,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let failed_axiom = try_out!(failed_axiom);
    match h.0.validate().failure {
        None => {
            *failed_axiom = ptr::null_mut();
            CofrobStatus::Ok
        }
        Some(f) => {
            *failed_axiom = owned_c_string(f.axiom.to_string());
            CofrobStatus::MathFailure
        }
    }
}

/// Solves for the integral on the given side (`0` left, `1` right) and writes
/// the covector as a JSON array of `"num/den"` strings.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_hopf_integral(
    h: *const CofrobHopf,
    side: i32,
    out: *mut *mut c_char,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let out = try_out!(out);
    let side = match side {
        0 => IntegralSide::Left,
        1 => IntegralSide::Right,
        _ => return CofrobStatus::InvalidInput,
    };
    match hopf::find_integral(&h.0, side) {
        Ok(Some(l)) => {
            let strings: Vec<String> = l.covector.iter().map(Scalar::to_string).collect();
            *out = owned_c_string(serde_json::to_string(&strings).expect("serializes"));
            CofrobStatus::Ok
        }
        Ok(None) | Err(_) => CofrobStatus::MathFailure,
    }
}

/// Parses a comodule JSON document (CLI schema).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_comodule_from_json(
    json: *const c_char,
    out: *mut *mut CofrobComodule,
) -> CofrobStatus {
    let out = try_out!(out);
    let text = match str_arg(json) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let parsed = match ComoduleFile::from_json(text) {
        Ok(f) => f,
        Err(_) => return CofrobStatus::InvalidInput,
    };
    match parsed.to_comodule() {
        Ok(m) => {
            *out = Box::into_raw(Box::new(CofrobComodule(m)));
            CofrobStatus::Ok
        }
        Err(_) => CofrobStatus::InvalidInput,
    }
}

/// # Safety
/// `m` must come from a cofrob constructor and not have been freed before.
#[no_mangle]
pub unsafe extern "C" fn cofrob_comodule_free(m: *mut CofrobComodule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

fn splitting_pair(
    h: &HopfAlgebra,
    m: &Comodule,
) -> Result<(bool, bool), CofrobStatus> {
    if !m.validate(h).ok {
        return Err(CofrobStatus::InvalidInput);
    }
    let split = hopf::splitting_test(h, m).map_err(|e| match e {
        hopf::HopfError::NotSimple => CofrobStatus::InvalidInput,
        _ => CofrobStatus::MathFailure,
    })?;
    let oracle = hopf::projectivity_oracle(h, m).map_err(|_| CofrobStatus::MathFailure)?;
    Ok((split.splitting, oracle))
}

/// Runs the splitting test on a simple comodule.
///
/// # Safety
/// `h` and `m` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_splitting_test(
    h: *const CofrobHopf,
    m: *const CofrobComodule,
    out: *mut bool,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let m = try_ptr!(m);
    let out = try_out!(out);
    match splitting_pair(&h.0, &m.0) {
        Ok((split, _)) => {
            *out = split;
            CofrobStatus::Ok
        }
        Err(status) => status,
    }
}

/// Runs the independent projectivity oracle on a simple comodule.
///
/// # Safety
/// `h` and `m` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cofrob_projectivity_oracle(
    h: *const CofrobHopf,
    m: *const CofrobComodule,
    out: *mut bool,
) -> CofrobStatus {
    let h = try_ptr!(h);
    let m = try_ptr!(m);
    let out = try_out!(out);
    match splitting_pair(&h.0, &m.0) {
        Ok((_, oracle)) => {
            *out = oracle;
            CofrobStatus::Ok
        }
        Err(status) => status,
    }
}
