//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers and the status-code contract.

use cofrob_ffi::*;
use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn read_data(rel: &str) -> CString {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.pop(); // crates/
    p.push("core");
    p.push("data");
    p.push(rel);
    c(&std::fs::read_to_string(p).unwrap())
}

fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { cofrob_string_free(ptr) };
    s
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(cofrob_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn manin_constructor_verifies_and_has_zero_q_rank() {
    let mut handle: *mut CofrobHecke = ptr::null_mut();
    let q = c("3/1");
    assert_eq!(
        unsafe { cofrob_hecke_manin_standard(q.as_ptr(), &mut handle) },
        CofrobStatus::Ok
    );
    let (mut ybe, mut hecke, mut closed) = (false, false, false);
    assert_eq!(
        unsafe { cofrob_hecke_verify(handle, &mut ybe, &mut hecke, &mut closed) },
        CofrobStatus::Ok
    );
    assert!(ybe && hecke && closed);

    let mut rank: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hecke_q_rank(handle, &mut rank) },
        CofrobStatus::Ok
    );
    assert_eq!(take_string(rank), "0/1");

    let mut dim = 0u64;
    assert_eq!(
        unsafe { cofrob_hecke_graded_dim(handle, true, 3, &mut dim) },
        CofrobStatus::Ok
    );
    assert_eq!(dim, 2);

    let mut verdict = false;
    assert_eq!(
        unsafe { cofrob_hecke_birank11(handle, 4, &mut verdict) },
        CofrobStatus::Ok
    );
    assert!(verdict);

    let mut comm = 0u64;
    assert_eq!(
        unsafe { cofrob_hecke_commutant_dim(handle, 3, &mut comm) },
        CofrobStatus::Ok
    );
    assert_eq!(comm, 6);

    unsafe { cofrob_hecke_free(handle) };
}

#[test]
fn hecke_json_and_invalid_parameters() {
    let json = read_data("rmatrix/flip2.json");
    let mut handle: *mut CofrobHecke = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hecke_from_json(json.as_ptr(), &mut handle) },
        CofrobStatus::Ok
    );
    let mut rank: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hecke_q_rank(handle, &mut rank) },
        CofrobStatus::Ok
    );
    assert_eq!(take_string(rank), "2/1");
    unsafe { cofrob_hecke_free(handle) };

    let bad_q = c("0/1");
    assert_eq!(
        unsafe { cofrob_hecke_manin_standard(bad_q.as_ptr(), &mut handle) },
        CofrobStatus::InvalidInput
    );
    let garbage = c("not json");
    assert_eq!(
        unsafe { cofrob_hecke_from_json(garbage.as_ptr(), &mut handle) },
        CofrobStatus::InvalidInput
    );
    assert_eq!(
        unsafe { cofrob_hecke_from_json(ptr::null(), &mut handle) },
        CofrobStatus::NullPointer
    );
}

#[test]
fn fusion_labels_and_products() {
    assert_eq!(cofrob_label_dim(1, 0), 2);
    assert_eq!(cofrob_label_dim(1, -1), 1);
    assert!(cofrob_label_is_splitting(1, 0));
    assert!(!cofrob_label_is_splitting(2, -2));

    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_fusion_mul_json(1, 0, -1, 0, &mut out) },
        CofrobStatus::Ok
    );
    let parsed: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(parsed["kind"], "indecomposable_injective");
    assert_eq!(parsed["socle"], serde_json::json!([0, 0]));
}

#[test]
fn hopf_validation_integrals_and_splitting() {
    let json = read_data("hopf/sweedler4.json");
    let mut hopf: *mut CofrobHopf = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hopf_from_json(json.as_ptr(), &mut hopf) },
        CofrobStatus::Ok
    );
    let mut axiom: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hopf_validate(hopf, &mut axiom) },
        CofrobStatus::Ok
    );
    assert!(axiom.is_null());

    let mut left: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hopf_integral(hopf, 0, &mut left) },
        CofrobStatus::Ok
    );
    assert_eq!(take_string(left), r#"["0/1","0/1","0/1","1/1"]"#);

    let comodule_json = read_data("comodule/trivial.json");
    let mut comodule: *mut CofrobComodule = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_comodule_from_json(comodule_json.as_ptr(), &mut comodule) },
        CofrobStatus::Ok
    );
    let mut split = true;
    assert_eq!(
        unsafe { cofrob_splitting_test(hopf, comodule, &mut split) },
        CofrobStatus::Ok
    );
    assert!(!split);
    let mut projective = true;
    assert_eq!(
        unsafe { cofrob_projectivity_oracle(hopf, comodule, &mut projective) },
        CofrobStatus::Ok
    );
    assert!(!projective);

    unsafe { cofrob_comodule_free(comodule) };
    unsafe { cofrob_hopf_free(hopf) };
}

#[test]
fn bad_antipode_reports_the_axiom() {
    let json = read_data("hopf/sweedler4_bad_antipode.json");
    let mut hopf: *mut CofrobHopf = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hopf_from_json(json.as_ptr(), &mut hopf) },
        CofrobStatus::Ok
    );
    let mut axiom: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(
        unsafe { cofrob_hopf_validate(hopf, &mut axiom) },
        CofrobStatus::MathFailure
    );
    assert!(take_string(axiom).starts_with("antipode"));
    unsafe { cofrob_hopf_free(hopf) };
}

#[test]
fn generated_header_exists_and_declares_the_surface() {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("include");
    p.push("cofrob.h");
    let header = std::fs::read_to_string(&p).unwrap();
    for symbol in [
        "CofrobStatus",
        "CofrobHecke",
        "cofrob_hecke_verify",
        "cofrob_fusion_mul_json",
        "cofrob_hopf_integral",
        "cofrob_splitting_test",
        "cofrob_string_free",
    ] {
        assert!(header.contains(symbol), "header misses {symbol}");
    }
}
