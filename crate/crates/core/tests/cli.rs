use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn twinid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twinid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(stdout(out).trim()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn quotient_of_complete_graph() {
    let out = twinid(&["quotient", "--gen", "complete:4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    let partition: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(partition["t"], 1);
    assert_eq!(partition["T"], 4);
    assert_eq!(lines.collect::<Vec<_>>(), ["1 0"]);
}

#[test]
fn quotient_reads_files_and_dimacs() {
    let dir = tempfile::tempdir().unwrap();
    let el = write(
        dir.path(),
        "g.txt",
        "# triangle plus pendant\n4 4\n0 1\n0 2\n1 2\n2 3\n",
    );
    let out = twinid(&["quotient", &el, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["partition"]["classes"],
        serde_json::json!([[0, 1], [2], [3]])
    );
    let col = write(
        dir.path(),
        "g.col",
        "c same graph\np edge 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n",
    );
    let again = twinid(&["quotient", &col, "--format", "json"]);
    assert_eq!(json(&again), v);
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.txt", "0 1\n1 2\n2 3\n");
    let bad = write(dir.path(), "bad.txt", "0 1\n1 1\n2 1\n");
    let short = write(dir.path(), "short.txt", "0 1\n1 2\n");
    let ok = twinid(&[
        "check",
        "--gen",
        "path:3",
        "--coloring",
        &good,
        "--variant",
        "lid",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let invalid = twinid(&[
        "check",
        "--gen",
        "path:3",
        "--coloring",
        &bad,
        "--variant",
        "id",
        "--format",
        "json",
    ]);
    assert_eq!(invalid.status.code(), Some(1));
    let v = json(&invalid);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["kind"], "unidentified-pair");
    let usage = twinid(&[
        "check",
        "--gen",
        "path:3",
        "--coloring",
        &short,
        "--variant",
        "id",
    ]);
    assert_eq!(usage.status.code(), Some(2));
    let unknown = twinid(&[
        "check",
        "--gen",
        "path:3",
        "--coloring",
        &good,
        "--variant",
        "nope",
    ]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn solve_reports_witness() {
    let out = twinid(&["solve", "--gen", "hp:3", "--variant", "id"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["variant"], "id");
    assert_eq!(v["optimum"], 5);
    assert_eq!(v["proof"], "exhaustive-below");
    assert_eq!(v["witness"].as_array().unwrap().len(), 7);
    let text = twinid(&[
        "solve",
        "--gen",
        "complete:3",
        "--variant",
        "lid",
        "--format",
        "text",
    ]);
    assert!(stdout(&text).starts_with("chi_lid = 3"));
}

#[test]
fn solve_guard_and_force() {
    let guarded = twinid(&["solve", "--gen", "path:15", "--variant", "id"]);
    assert_eq!(guarded.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&guarded.stderr).contains("force"));
    let raised = twinid(&[
        "solve",
        "--gen",
        "path:15",
        "--variant",
        "rlid",
        "--max-vertices",
        "15",
    ]);
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn gen_writes_labels() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("labels.json");
    let out = twinid(&[
        "gen",
        "hp",
        "--p",
        "1",
        "--labels",
        labels.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "3 2\n0 1\n1 2");
    let sidecar: Value = serde_json::from_str(&std::fs::read_to_string(labels).unwrap()).unwrap();
    assert_eq!(sidecar["family"], "hp");
    assert_eq!(sidecar["labels"], serde_json::json!(["k_0", "k_1", "s_1"]));
    let a = twinid(&["gen", "random", "--n", "6", "--prob", "0.3", "--seed", "9"]);
    let b = twinid(&["gen", "random", "--n", "6", "--prob", "0.3", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_bounds_seeded_corpus() {
    let out = twinid(&[
        "verify-bounds",
        "--seeds",
        "0..10",
        "--variant",
        "all",
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 30);
    for line in text.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["satisfied"], true);
    }
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("0 violated"), "{summary}");
}

#[test]
fn verify_bounds_tight_instance() {
    let out = twinid(&["verify-bounds", "--gen", "htt:2,2,1", "--variant", "lid"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["chi_g"], 6);
    assert_eq!(v["upper"], 6);
    assert_eq!(v["upper_tight"], true);
}

#[test]
fn verify_bounds_directory() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "3 3\n0 1\n0 2\n1 2\n");
    write(dir.path(), "b.txt", "3 2\n0 1\n1 2\n");
    let out = twinid(&[
        "verify-bounds",
        "--corpus",
        dir.path().to_str().unwrap(),
        "--variant",
        "id",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 2);
}

#[test]
fn idcode_solve_check_compare() {
    let dir = tempfile::tempdir().unwrap();
    let out = twinid(&["idcode", "--gen", "path:4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["variant"], "idcode");
    assert_eq!(v["optimum"], 3);
    let code = write(dir.path(), "code.txt", "0\n");
    let bad = twinid(&["idcode", "--gen", "path:4", "--check", &code]);
    assert_eq!(bad.status.code(), Some(1));
    let cmp = twinid(&["idcode", "--gen", "htt:2,3,1", "--compare-quotient"]);
    assert_eq!(json(&cmp)["equal"], true);
}

#[test]
fn weighted_solve_and_compare() {
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w.txt", "0 2\n1 1\n2 1\n");
    let out = twinid(&["weighted", "--gen", "path:3", "--weights", &w]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["variant"], "weighted");
    assert!(v["witness"][0].as_array().unwrap().len() <= 2);
    let sets = write(dir.path(), "sets.txt", "0 1\n1 2\n2 3\n");
    let check = twinid(&[
        "weighted",
        "--gen",
        "path:3",
        "--uniform",
        "1",
        "--check",
        &sets,
    ]);
    assert_eq!(check.status.code(), Some(0));
    let cmp = twinid(&[
        "weighted",
        "--gen",
        "htt:1,2,1",
        "--uniform",
        "1",
        "--compare-quotient",
    ]);
    assert_eq!(json(&cmp)["equal"], true);
}

#[test]
fn parse_errors_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3 1\n0 7\n");
    let out = twinid(&["quotient", &g]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let missing = twinid(&["quotient", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}
