use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn nsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsc")).args(args).output().expect("run nsc")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn emit(id: &str, dir: &Path) -> String {
    let path = dir.join(format!("{id}.json"));
    let p = path.to_str().unwrap().to_string();
    assert_eq!(nsc(&["zoo", "emit", id, &p]).status.code(), Some(0));
    p
}

#[test]
fn s_table_contains_the_first_constant() {
    let out = nsc(&["s-table", "--genus", "2", "--m-max", "5", "--j-max", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    let entries = v["payload"]["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["m"] == 3 && e["j"] == 1 && e["value"] == "-5/6"));
}

#[test]
fn s_table_text_grid() {
    let out = nsc(&["s-table", "--genus", "2", "--m-max", "5", "--j-max", "2", "--table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("-5/6") && text.contains("10/27"));
}

#[test]
fn empty_table_passes() {
    let out = nsc(&["s-table", "--genus", "2", "--m-max", "3", "--j-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["payload"]["entries"].as_array().unwrap().len(), 0);
}

#[test]
fn usage_errors_exit_2() {
    let out = nsc(&["s-table", "--genus", "1", "--m-max", "5", "--j-max", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["status"], "error");
    assert_eq!(nsc(&["s-table", "--genus", "2"]).status.code(), Some(2));
    assert_eq!(nsc(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(nsc(&["verify", "--suite", "closed-forms", "--genus-range", "1..3"]).status.code(), Some(2));
    assert_eq!(nsc(&["verify", "--suite", "grading", "--perturb", "c1"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let out = nsc(&["zoo", "emit", "nope", dir.path().join("x.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_curve_spec_exits_2_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"components":["c0"],"singularities":[{"branches":[{"component":"c0","point":"0"}],"jet_order":4,"conductor":2,"algebra_basis":[["0","0","1","0"],["0","0","0","1"]]}],"marked":[]}"#,
    )
    .unwrap();
    let out = nsc(&["curve", "genus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert!(v["diagnostics"][0].as_str().unwrap().contains("constants"));
}

#[test]
fn verification_suites_pass() {
    for suite in ["buchberger", "grading", "zoo-genus", "c0", "ab-equivalence", "origin"] {
        let out = nsc(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
        assert_eq!(json(&out)["status"], "pass");
    }
}

#[test]
fn injected_perturbation_fails_with_exit_1() {
    for c in ["c1", "c2", "c3"] {
        let out = nsc(&["verify", "--suite", "buchberger", "--perturb", c]);
        assert_eq!(out.status.code(), Some(1));
        assert_eq!(json(&out)["status"], "fail");
    }
}

#[test]
fn zoo_list_has_all_cases() {
    let v = json(&nsc(&["zoo", "list"]));
    let ids: Vec<&str> = v["payload"]["ids"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(ids.len(), 10);
    assert!(ids.contains(&"IIb-tacnode") && ids.contains(&"ccusp-<a>"));
}

#[test]
fn emitted_curves_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let tac = emit("IIb-tacnode", dir.path());
    assert_eq!(json(&nsc(&["curve", "genus", &tac]))["payload"]["genus"], 2);
    let c0 = emit("IIc-C0", dir.path());
    assert_eq!(json(&nsc(&["curve", "genus", &c0]))["payload"]["genus"], 2);
    let v = json(&nsc(&["curve", "h0", &c0, "--divisor", "2*pinf"]));
    assert_eq!(v["payload"]["h0"], 2);
    assert_eq!(v["payload"]["basis"], serde_json::json!(["c0: 1", "c0: t^2"]));
    assert_eq!(json(&nsc(&["curve", "h0", &c0, "--divisor", "2*p0"]))["payload"]["h0"], 1);
    assert_eq!(json(&nsc(&["curve", "h1", &c0, "--divisor", "2*p1"]))["payload"]["h1"], 1);
}

#[test]
fn fit_at_the_cusp_origin() {
    let dir = tempfile::tempdir().unwrap();
    let cc = emit("IIc-ccusp2", dir.path());
    let out = nsc(&["curve", "fit", &cc, "--point", "p0"]);
    assert_eq!(out.status.code(), Some(0));
    let params = &json(&out)["payload"]["params"];
    for q in ["q1", "q20", "q21", "q30", "q31"] {
        assert_eq!(params[q], "0");
    }
}

#[test]
fn fit_at_a_weierstrass_point_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let c0 = emit("IIc-C0", dir.path());
    let out = nsc(&["curve", "fit", &c0, "--point", "pinf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["diagnostics"][0].as_str().unwrap().contains("Weierstrass"));
}

#[test]
fn alphabeta_and_canonical() {
    let dir = tempfile::tempdir().unwrap();
    let ia = emit("Ia", dir.path());
    let v = json(&nsc(&["curve", "alphabeta", &ia, "--point", "p0"]));
    assert_eq!(v["payload"]["alpha"], "-5/48");
    assert_eq!(v["payload"]["beta"], "7/1152");
    let v = json(&nsc(&["curve", "canonical", &ia, "--point", "p0", "--weights", "1,1", "--m-max", "4"]));
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["coefficients"][0]["value"], "1");
    assert_eq!(nsc(&["curve", "canonical", &ia, "--weights", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "--suite", "closed-forms", "--genus-range", "2..6"];
    let a = nsc(&args);
    let b = nsc(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let a = nsc(&["verify", "--suite", "open-set"]);
    let b = nsc(&["verify", "--suite", "open-set"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn desk_check_reports_instead_of_aborting() {
    let out = nsc(&["verify", "--suite", "desk-check"]);
    assert!(matches!(out.status.code(), Some(0) | Some(1)));
    let v = json(&out);
    assert_eq!(v["payload"]["runs"].as_array().unwrap().len(), 3);
    assert_eq!(v["payload"]["runs"][0]["entries"].as_array().unwrap().len(), 8);
}
