//! End-to-end tests of the command-line interface: output contracts and the
//! stable exit-code mapping (0 ok, 1 mathematical failure, 2 bad input).

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(rel);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cofrob"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("valid JSON on stdout")
}

#[test]
fn hecke_verify_manin_passes_with_zero_q_rank() {
    let out = run(&["hecke", "verify", &data("rmatrix/manin_q3.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["ybe"], true);
    assert_eq!(v["hecke"], true);
    assert_eq!(v["closed"], true);
    assert_eq!(v["qrank"], "0/1");
}

#[test]
fn hecke_verify_flip_has_q_rank_two() {
    let out = run(&["hecke", "verify", &data("rmatrix/flip2.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["qrank"], "2/1");
}

#[test]
fn hecke_verify_identity_fails_hecke_relation() {
    let out = run(&["hecke", "verify", &data("rmatrix/identity_q3.json"), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    assert_eq!(v["ybe"], true);
    assert_eq!(v["hecke"], false);
}

#[test]
fn hecke_verify_missing_file_is_an_input_error() {
    let out = run(&["hecke", "verify", "/nonexistent/r.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hecke_verify_invalid_q_is_a_mathematical_failure() {
    let dir = std::env::temp_dir().join("cofrob-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad_q.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "q": "-1/1", "entries": [[0,0,"1/1"],[1,1,"1/1"],[2,2,"1/1"],[3,3,"1/1"]]}"#,
    )
    .unwrap();
    let out = run(&["hecke", "verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("q"), "stderr: {err}");
}

#[test]
fn hecke_poincare_manin_detects_birank() {
    let out = run(&[
        "hecke",
        "poincare",
        &data("rmatrix/manin_q3.json"),
        "--max-degree",
        "6",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["sym_dims"], serde_json::json!([1, 2, 2, 2, 2, 2, 2]));
    assert_eq!(v["ext_dims"], serde_json::json!([1, 2, 2, 2, 2, 2, 2]));
    assert_eq!(v["birank11"], true);
    assert_eq!(v["a"], "1/1");
    assert_eq!(v["b"], "1/1");
}

#[test]
fn hecke_poincare_flip_is_not_birank() {
    let out = run(&[
        "hecke",
        "poincare",
        &data("rmatrix/flip2.json"),
        "--max-degree",
        "4",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["ext_dims"], serde_json::json!([1, 2, 1, 0, 0]));
    assert_eq!(v["birank11"], false);
}

#[test]
fn hecke_poincare_superflip_is_birank() {
    let out = run(&[
        "hecke",
        "poincare",
        &data("rmatrix/superflip11.json"),
        "--max-degree",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("birank (1,1): yes"));
}

#[test]
fn fusion_mul_examples() {
    let out = run(&["fusion", "mul", "1", "0", "1", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "(1,1) + (2,0)");

    let out = run(&["fusion", "mul", "1", "0", "-1", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("INDEC-INJ socle (0,0)"), "got: {text}");
    assert!(text.contains("2\u{b7}(0,0)"), "got: {text}");
    assert!(text.contains("(1,-1)") && text.contains("(-1,1)"), "got: {text}");

    let out = run(&["fusion", "mul", "0", "0", "5", "-3"]);
    assert_eq!(stdout_of(&out).trim(), "(5,-3)");
}

#[test]
fn fusion_mul_json_lists_label_pairs() {
    let out = run(&["fusion", "mul", "1", "0", "-1", "0", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["kind"], "indecomposable_injective");
    assert_eq!(v["socle"], serde_json::json!([0, 0]));
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 3);
}

#[test]
fn fusion_table_checks_dimensions() {
    let out = run(&["fusion", "table", "--range", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("dimension check: pass on all 81 products"));
}

#[test]
fn hopf_analyze_sweedler() {
    let out = run(&["hopf", "analyze", &data("hopf/sweedler4.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(
        v["left_integral"],
        serde_json::json!(["0/1", "0/1", "0/1", "1/1"])
    );
    assert_eq!(
        v["right_integral"],
        serde_json::json!(["0/1", "0/1", "1/1", "0/1"])
    );
    assert_eq!(v["b_rank"], 4);
    assert_eq!(v["convolution_associative"], true);
}

#[test]
fn hopf_analyze_sweedler_with_trivial_comodule() {
    let out = run(&[
        "hopf",
        "analyze",
        &data("hopf/sweedler4.json"),
        "--comodule",
        &data("comodule/trivial.json"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["comodule"]["simple"], true);
    assert_eq!(v["comodule"]["splitting"], false);
    assert_eq!(v["comodule"]["projectivity_oracle"], false);
    assert_eq!(v["comodule"]["agreement"], true);
}

#[test]
fn hopf_analyze_kc2_with_character_comodule() {
    let out = run(&[
        "hopf",
        "analyze",
        &data("hopf/kc2.json"),
        "--comodule",
        &data("comodule/character_g.json"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["comodule"]["splitting"], true);
    assert_eq!(v["comodule"]["projectivity_oracle"], true);
    assert_eq!(v["comodule"]["agreement"], true);
}

#[test]
fn hopf_analyze_reports_failing_axiom() {
    let out = run(&["hopf", "analyze", &data("hopf/sweedler4_bad_antipode.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("antipode"), "stderr: {err}");
}

#[test]
fn hopf_analyze_regular_comodule_is_not_simple() {
    let out = run(&[
        "hopf",
        "analyze",
        &data("hopf/sweedler4.json"),
        "--comodule",
        &data("comodule/regular_sweedler4.json"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["comodule"]["simple"], false);
    assert!(v["comodule"]["splitting"].is_null());
}
