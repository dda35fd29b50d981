use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn lozenge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lozenge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn enumerate_admissible_length_four_lists_42() {
    let o = lozenge(&["enumerate", "admissible", "--length", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 42);
    let o = lozenge(&["enumerate", "admissible", "--length", "4", "--format", "json"]);
    let v: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.len(), 42);
    assert_eq!(v[0], "(1,3,5,7)");
}

#[test]
fn enumerate_dyck_paths() {
    let o = lozenge(&["enumerate", "dyck", "--length", "3"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| l.len() == 6));
}

#[test]
fn negative_control_fails_with_counterexample() {
    let o = lozenge(&["verify-detid", "--max-m", "1", "--include", "(3)", "--samples", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    let line = err.lines().find(|l| l.starts_with("counterexample: ")).expect("counterexample printed");
    let rec: Value = serde_json::from_str(line.trim_start_matches("counterexample: ")).unwrap();
    assert_eq!(rec["check"], "detid.theorem");
    assert_eq!(rec["params"]["a"], serde_json::json!([3]));
    assert_eq!(rec["status"], "fail");
    assert_ne!(rec["lhs"], rec["rhs"]);
}

#[test]
fn detid_json_is_reproducible_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = lozenge(&[
            "verify-detid", "--max-m", "2", "--samples", "3", "--seed", "5", "--no-timing", "--format", "json",
            "--out", p.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["seed"], 5);
    let recs = v["records"].as_array().unwrap();
    assert!(recs.iter().all(|r| r["status"] == "pass" && r["millis"].is_null()));
    let keys: Vec<&str> = recs[0].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["check", "lhs", "millis", "params", "rhs", "status"]);
}

#[test]
fn timing_is_recorded_by_default() {
    let o = lozenge(&["verify-lemma", "--max-n", "3", "--vectors", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["millis"].is_u64()));
}

#[test]
fn small_half_and_quarter_sweeps_pass() {
    let o = lozenge(&["verify-half", "--max-width", "2", "--max-height", "2", "--d-max", "1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
    let o = lozenge(&["verify-quarter", "--max-width", "2", "--max-height", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn out_of_range_bounds_are_rejected() {
    let o = lozenge(&["verify-detid", "--max-m", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--max-m"));
    let o = lozenge(&["verify-detid", "--include", "(3,x)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tilings_and_render_read_region_files() {
    let dir = tempfile::tempdir().unwrap();
    let region = dir.path().join("r.json");
    fs::write(&region, r#"{"kind":"half_hexagon","width":2,"height":3,"left_dents":[1,3],"right_dents":[3]}"#).unwrap();
    let r = region.to_str().unwrap();
    let o = lozenge(&["enumerate", "tilings", "--region", r, "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let tilings: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!tilings.is_empty());

    let svg = dir.path().join("r.svg");
    let o = lozenge(&["render", r, "--tiling", "0", "--out", svg.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml") && text.trim_end().ends_with("</svg>"));
    let again = lozenge(&["render", r, "--tiling", "0"]);
    assert_eq!(stdout(&again), text);

    let o = lozenge(&["render", r, "--tiling", "999"]);
    assert_eq!(o.status.code(), Some(2));
    fs::write(&region, r#"{"kind":"half_hexagon","width":2,"height":3,"left_dents":[1],"colour":1}"#).unwrap();
    let o = lozenge(&["render", r]);
    assert_eq!(o.status.code(), Some(2));
    let o = lozenge(&["enumerate", "tilings"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = lozenge(&["selftest", "--format", "json", "--no-timing"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let err = stderr(&o);
    assert_eq!(err.lines().filter(|l| l.contains(" PASS ")).count(), 10);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["records"].as_array().unwrap().len() > 4000);
}
