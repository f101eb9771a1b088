//! End-to-end tests of the `tring` binary: exit codes, report content and
//! byte determinism.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn tring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_example_document() {
    let out = tring(&["analyze", data("example.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["valid"], Value::from(true));
    assert_eq!(json["r"], Value::from(2));
    assert_eq!(json["n_total"], Value::from(3));
    assert_eq!(json["sincere"], Value::from(true));
    assert_eq!(json["K"]["rank"], Value::from(1));
    assert_eq!(json["K"]["torsion"], serde_json::json!([2, 2]));
    assert_eq!(
        json["relations"],
        serde_json::json!(["T_01^2 - T_11^2 + T_21^2"])
    );
    assert_eq!(json["factorial"], Value::from(false));
    assert_eq!(json["pointed_witness"], serde_json::json!([4, 4, 4]));
    assert_eq!(json["complexity_one"], Value::from(true));
    assert_eq!(json["P"], serde_json::json!([[-2, 2, 0], [-2, 0, 2]]));
}

#[test]
fn analyze_is_byte_deterministic() {
    let path = data("example.json");
    let first = tring(&["analyze", path.to_str().unwrap()]);
    let second = tring(&["analyze", path.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn analyze_text_format() {
    let out = tring(&[
        "analyze",
        data("example.json").to_str().unwrap(),
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("K: Z ⊕ Z/2 ⊕ Z/2"));
    assert!(text.contains("factorial: no"));
    assert!(text.contains("pointed witness: (4, 4, 4)"));
}

#[test]
fn analyze_r1_has_no_verdict() {
    let out = tring(&["analyze", data("r1_free.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["factorial"], Value::from("n/a: not sincere"));
    assert_eq!(json["K"]["torsion"], serde_json::json!([]));
    assert_eq!(json["relations"], serde_json::json!([]));
}

#[test]
fn analyze_invalid_data_exits_2() {
    let out = tring(&["analyze", data("invalid_parallel.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let json = stdout_json(&out);
    assert_eq!(json["valid"], Value::from(false));
    let violations = json["violations"].as_array().unwrap();
    assert!(violations
        .iter()
        .any(|v| v.as_str().unwrap().contains("alpha")));
}

#[test]
fn analyze_malformed_json_exits_1() {
    let out = tring(&["analyze", data("malformed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn analyze_missing_file_exits_1() {
    let out = tring(&["analyze", "/nonexistent/nowhere.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cox_auto_surface() {
    let out = tring(&[
        "cox",
        data("example.json").to_str().unwrap(),
        "--auto-surface",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["admissible"], Value::from(true));
    assert_eq!(json["s"], Value::from(1));
    assert_eq!(json["m"], Value::from(2));
    assert_eq!(
        json["dotP"],
        serde_json::json!([[-2, 2, 0, 0, 0], [-2, 0, 2, 0, 0], [1, 1, 1, 1, -1]])
    );
    assert_eq!(json["Kdot"]["rank"], Value::from(2));
    let orders: Vec<Value> = json["isotropy"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["order"].clone())
        .collect();
    assert_eq!(
        orders,
        vec![
            Value::from(2),
            Value::from(2),
            Value::from(2),
            Value::from("infinite"),
            Value::from("infinite")
        ]
    );
    assert_eq!(json["nonassociated_generators"], Value::from(true));
}

#[test]
fn cox_explicit_matrices_match_the_recipe() {
    let out = tring(&[
        "cox",
        data("example.json").to_str().unwrap(),
        "--d",
        data("d_surface.json").to_str().unwrap(),
        "--dprime",
        data("dprime_surface.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let auto = tring(&[
        "cox",
        data("example.json").to_str().unwrap(),
        "--auto-surface",
    ]);
    assert_eq!(out.stdout, auto.stdout);
}

#[test]
fn cox_duplicate_columns_exit_3() {
    let out = tring(&[
        "cox",
        data("example.json").to_str().unwrap(),
        "--d",
        data("d_dup.json").to_str().unwrap(),
        "--dprime",
        data("dprime_dup.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let json = stdout_json(&out);
    assert_eq!(json["admissible"], Value::from(false));
    assert_eq!(json["checks"]["columns_distinct"], Value::from(false));
    assert_eq!(json["duplicate_columns"], serde_json::json!([[3, 4]]));
}

#[test]
fn cox_bound_violation_exit_3() {
    let out = tring(&[
        "cox",
        data("example.json").to_str().unwrap(),
        "--d",
        data("d_bound.json").to_str().unwrap(),
        "--dprime",
        data("dprime_bound.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let json = stdout_json(&out);
    assert_eq!(json["checks"]["bound"], Value::from(false));
}

#[test]
fn cox_requires_some_data_source() {
    let out = tring(&["cox", data("example.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

fn enumerate_lines(args: &[&str]) -> (Vec<Value>, Value) {
    let out = tring(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("NDJSON line"))
        .collect();
    let summary = lines.pop().expect("summary line");
    (lines, summary)
}

#[test]
fn enumerate_tight_sincere_bounds() {
    let (lines, summary) = enumerate_lines(&[
        "enumerate",
        "--r",
        "2",
        "--max-n",
        "1",
        "--max-l",
        "2",
        "--sincere-only",
    ]);
    assert_eq!(lines.len(), 1);
    let only = &lines[0];
    assert_eq!(only["n"], serde_json::json!([1, 1, 1]));
    assert_eq!(only["L"], serde_json::json!([[2], [2], [2]]));
    assert_eq!(only["report"]["factorial"], Value::from(false));
    assert_eq!(summary["summary"]["candidates"], Value::from(8));
    assert_eq!(summary["summary"]["emitted"], Value::from(1));
    assert_eq!(summary["summary"]["not_factorial"], Value::from(1));
}

#[test]
fn enumerate_finds_factorial_classes() {
    // blocks of size 2 can be sincere with coprime gcds
    let (lines, summary) = enumerate_lines(&[
        "enumerate",
        "--r",
        "2",
        "--max-n",
        "2",
        "--max-l",
        "3",
        "--sincere-only",
    ]);
    let factorial = summary["summary"]["factorial"].as_u64().unwrap();
    let not_factorial = summary["summary"]["not_factorial"].as_u64().unwrap();
    let sincere = summary["summary"]["sincere"].as_u64().unwrap();
    assert!(factorial > 0, "expected factorial classes in the sweep");
    assert_eq!(factorial + not_factorial, sincere);
    assert_eq!(sincere, lines.len() as u64);
    // every emitted line is sincere and carries a boolean verdict matching
    // pairwise coprimality of its block gcds
    for line in &lines {
        assert!(line["report"]["factorial"].is_boolean());
    }
}

#[test]
fn enumerate_guardrail_exits_4() {
    let out = tring(&[
        "enumerate", "--r", "3", "--max-n", "3", "--max-l", "10",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}

#[test]
fn enumerate_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stream.ndjson");
    let out = tring(&[
        "enumerate",
        "--r",
        "2",
        "--max-n",
        "1",
        "--max-l",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 9); // 8 candidates + summary
}

#[test]
fn enumerate_is_byte_deterministic() {
    let args = ["enumerate", "--r", "2", "--max-n", "1", "--max-l", "3"];
    let first = tring(&args);
    let second = tring(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}
