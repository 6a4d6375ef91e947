//! End-to-end tests of the binary: output shapes and exit codes.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lapsnf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_file(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn family_then_snf_prints_expected_factors() {
    let dir = tempfile::tempdir().unwrap();
    let emitted = run(&["family", "complete_minus_edge", "6", "--edges"]);
    assert!(emitted.status.success());
    let path = write_file(dir.path(), "k6e.el", &stdout(&emitted));
    let out = run(&["snf", &path]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 1 6 6 24 0");
}

#[test]
fn snf_divisors_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "k3.g6", "Bw\n");
    let out = run(&["snf", &path, "--divisors"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 3 0\ndivisors 1 1 3 0\n");
}

#[test]
fn classify_json_schema_is_stable() {
    let out = run_with_stdin(&["classify", "-", "--json"], "E^~w\n"); // K6 - e
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    for key in ["n", "factors", "s3_class", "matched_family", "tree_count"] {
        assert!(value.get(key).is_some(), "missing key {key}");
    }
    assert!(value["factors"].as_array().unwrap().iter().all(|f| f.is_string()));
    assert_eq!(value["n"], 6);
}

#[test]
fn classify_csv_has_header() {
    let out = run_with_stdin(&["classify", "-", "--csv"], "Bw\n");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("source,n,factors,s3_class"));
    assert!(text.contains("NOT_APPLICABLE"));
}

#[test]
fn trees_counts_spanning_trees() {
    let out = run_with_stdin(&["trees", "-"], "D~{\n"); // K5
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "125");
}

#[test]
fn verify_n5_reports_witness_counts() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("out.json");
    let out = run(&["verify", "--n", "5", "--json", json_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let summary = &value[0];
    assert_eq!(summary["total_connected"], 21);
    assert_eq!(summary["witnesses"]["EQ_N"].as_array().unwrap().len(), 1);
    assert_eq!(summary["witnesses"]["EQ_N_MINUS_3"].as_array().unwrap().len(), 2);
    assert_eq!(summary["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_range_and_jobs() {
    let out = run(&["verify", "--n", "3", "--max-n", "5", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n=3: 2 connected classes"));
    assert!(text.contains("n=4: 6 connected classes"));
    assert!(text.contains("n=5: 21 connected classes"));
}

#[test]
fn verify_rejects_n9_without_opt_in() {
    let out = run(&["verify", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_honors_jobs_env_var() {
    let out = bin()
        .args(["verify", "--n", "5"])
        .env("LAPSNF_JOBS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n=5: 21 connected classes"));
}

#[test]
fn convert_round_trips_between_formats() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = run(&["family", "k23", "5"]);
    let g6_line = stdout(&g6).trim().to_string();
    let path = write_file(dir.path(), "k23.g6", &format!("{g6_line}\n"));

    let as_edges = run(&["convert", &path, "--to", "edges"]);
    assert!(as_edges.status.success());
    let el_path = write_file(dir.path(), "k23.el", &stdout(&as_edges));

    let back = run(&["convert", &el_path, "--to", "g6"]);
    assert!(back.status.success());
    assert_eq!(stdout(&back).trim(), g6_line);
}

#[test]
fn malformed_graph6_exits_1_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "bad.g6", "Bw\nB\n");
    let out = run(&["snf", &path]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains(":2:"), "stderr was: {err}");
}

#[test]
fn lenient_skips_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "mixed.g6", "B\nBw\n");
    let out = run(&["snf", &path, "--lenient"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1 3 0");
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["snf", "--nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_family_exits_2_and_lists_names() {
    let out = run(&["family", "petersen", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("complete_minus_edge"));
}

#[test]
fn family_out_of_range_exits_2() {
    let out = run(&["family", "complete_minus_2e", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn format_detection_failure_mentions_format_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "graphs.txt", "Bw\n");
    let out = run(&["snf", &path]);
    assert_eq!(out.status.code(), Some(2));
    let ok = run(&["snf", &path, "--format", "g6"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn header_line_is_ignored() {
    let out = run_with_stdin(&["snf", "-"], ">>graph6<<Bw\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 3 0");
}
