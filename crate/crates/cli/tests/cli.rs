use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shifted-crystal")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn shifted_lr_all_methods_agree() {
    let v = json(&bin(&["coeff", "shifted-lr", "--mu", "3,1", "--nu", "3,1"]));
    assert_eq!(v["agree"], true);
    assert_eq!(v["coefficients"]["4,3,1"], 2);
    assert_eq!(v["methods"].as_object().unwrap().len(), 4);
}

#[test]
fn schur_expansion_of_p31() {
    let v = json(&bin(&["coeff", "g", "--lambda", "3,1"]));
    assert_eq!(v["coefficients"], serde_json::json!({"3,1": 1, "2,2": 1, "2,1,1": 1}));
}

#[test]
fn single_method_prints_a_bare_map() {
    let v = json(&bin(&["coeff", "skew-ssdt", "--lambda", "6,5,2,1", "--mu", "4,2", "--method", "oracle"]));
    assert_eq!(v, serde_json::json!({"6,2": 2, "5,3": 3, "5,2,1": 3, "4,3,1": 3}));
}

#[test]
fn non_monotone_partitions_are_rejected() {
    let out = bin(&["coeff", "g", "--lambda", "1,3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--lambda"));
}

#[test]
fn unavailable_method_is_an_error() {
    let out = bin(&["coeff", "g", "--lambda", "3,1", "--method", "stembridge"]);
    assert!(!out.status.success());
}

#[test]
fn crystal_on_ssdt_31_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let v = json(&bin(&["crystal", "--lambda", "3,1", "--n", "3", "--dot", dot.to_str().unwrap()]));
    assert_eq!(v["vertices"], 24);
    assert_eq!(v["components"], serde_json::json!({"3,1": 1}));
    let first = std::fs::read_to_string(&dot).unwrap();
    assert!(first.starts_with("digraph"));
    assert_eq!(first.matches("->").count(), 38);

    let again = dir.path().join("h.dot");
    json(&bin(&["crystal", "--lambda", "3,1", "--n", "3", "--dot", again.to_str().unwrap()]));
    assert_eq!(first, std::fs::read_to_string(&again).unwrap());
}

#[test]
fn smallest_crystal_has_one_plain_and_one_bar_edge() {
    let v = json(&bin(&["crystal", "--lambda", "1", "--n", "2"]));
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64(), v["bar_edges"].as_u64()), (Some(2), Some(2), Some(1)));
}

#[test]
fn staircase_model_needs_a_staircase_inner_shape() {
    let v = json(&bin(&["crystal", "--lambda", "2,2", "--skew-inner", "1", "--n", "3", "--model", "ssyt"]));
    assert_eq!(v["components"], serde_json::json!({"2,1": 1}));
    assert!(!bin(&["crystal", "--lambda", "3,2", "--skew-inner", "2", "--n", "3", "--model", "ssyt"]).status.success());
}

#[test]
fn infeasible_crystal_fails() {
    assert!(!bin(&["crystal", "--lambda", "3,2,1", "--n", "2"]).status.success());
}

#[test]
fn enumerate_lists_tableaux() {
    let v = json(&bin(&["enumerate", "ssdt", "--lambda", "3,1", "--n", "3"]));
    assert_eq!(v["count"], 24);
    let v = json(&bin(&["enumerate", "fskew", "--lambda", "6,5,2,1", "--mu", "4,2", "--nu", "6,2"]));
    assert_eq!(v["tableaux"][0], serde_json::json!(["1 1 2' 2 3 3", "2 4"]));
}

#[test]
fn verify_writes_json_and_sets_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let ok = bin(&["verify", "--suite", "lr-rules-agree", "--max-size", "5", "--out", out.to_str().unwrap()]);
    assert!(ok.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["suite"], "lr-rules-agree");

    let bad = bin(&["verify", "--suite", "complement-identity-literal", "--max-size", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json_unchecked(&bad)["passed"], false);
}

#[test]
fn unknown_suite_is_rejected() {
    let out = bin(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["verify", "--suite", "crystal-axioms", "--max-size", "5", "--samples", "300", "--seed", "7"];
    let (a, b) = (bin(&args), bin(&args));
    assert_eq!(a.stdout, b.stdout);
}

fn json_unchecked(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}
