use std::fs;
use std::process::{Command, Output};

use q8deform::params::DeformationParams;
use serde_json::Value;

fn q8deform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_q8deform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_example_passes() {
    let out = q8deform(&["verify", "--preset", "example"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("dimension-vector"));
    assert!(text.contains("[1, 1, 1, 1, 2]"));
    assert!(text.ends_with("verdict: pass\n"));
}

#[test]
fn verify_json_lists_every_check_once() {
    let out = q8deform(&["verify", "--preset", "example", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let ids: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), 22);
    let mut unique = ids.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), ids.len());
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["tool"], "q8deform");
    assert!(doc["checks"][0].get("elapsed_ms").is_none());
}

#[test]
fn check_filter_runs_only_the_selection() {
    let out = q8deform(&["verify", "--preset", "example", "--check", "cocycle", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["id"], "cocycle");
}

#[test]
fn timings_are_opt_in() {
    let out = q8deform(&["verify", "--check", "params", "--format", "json", "--timings"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc["checks"][0]["elapsed_ms"].is_number());
}

#[test]
fn equal_roots_fail_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "bad.params", "w = t\nc = 1+t\nd = 1+t\n");
    let out = q8deform(&["verify", "--params-file", &path]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL    params"));
    assert!(text.contains("c-ne-d"));
    assert!(text.contains("SKIPPED"));
}

#[test]
fn input_errors_exit_2_without_panicking() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        write_temp(&dir, "syntax.params", "w = t^^2\nc = 1\nd = 1+t\n"),
        write_temp(&dir, "missing.params", "w = t\n"),
        write_temp(&dir, "zero-den.params", "w = 1/0\nc = 1\nd = 1+t\n"),
        dir.path().join("absent.params").to_str().unwrap().to_string(),
    ];
    for path in &cases {
        let out = q8deform(&["verify", "--params-file", path]);
        assert_eq!(out.status.code(), Some(2), "{path}: {}", stderr(&out));
        assert!(!stderr(&out).contains("panicked"));
        assert!(stderr(&out).starts_with("error:"));
    }
    for args in [
        vec!["verify", "--format", "yaml"],
        vec!["verify", "--check", "nonexistent"],
        vec!["verify", "--precision", "0"],
        vec!["report", "--format", "xml"],
        vec!["params", "search", "--degree-bound", "9"],
    ] {
        let out = q8deform(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&out).contains("panicked"));
    }
}

#[test]
fn degenerate_values_are_reported_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("a-zero.params", "a = 0\nb = 1\nw = t\nc = 1\nd = 1+t\n"),
        ("z-unit.params", "w = t\nc = 1/(1+t)\nd = 1+t+t^2\nz = 1\n"),
        ("pole.params", "w = 1/t\nc = 1\nd = 1+t\n"),
    ] {
        let path = write_temp(&dir, name, text);
        let out = q8deform(&["verify", "--params-file", &path]);
        assert_eq!(out.status.code(), Some(1), "{name}");
        assert!(!stderr(&out).contains("panicked"));
    }
}

#[test]
fn params_validate_example() {
    let out = q8deform(&["params", "validate", "--preset", "example"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pi-irreducible"));
    assert!(stdout(&out).ends_with("verdict: pass\n"));
}

#[test]
fn search_degree_zero_is_empty() {
    let out = q8deform(&["params", "search", "--degree-bound", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim().is_empty());
}

#[test]
fn search_results_revalidate() {
    let out = q8deform(&["params", "search", "--degree-bound", "3", "--limit", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let tuples: Vec<&str> = text.split("\n\n").filter(|b| !b.trim().is_empty()).collect();
    assert!(!tuples.is_empty() && tuples.len() <= 5);
    for block in tuples {
        let p = DeformationParams::parse_file(block).unwrap();
        assert!(p.validate().passed(), "{block}");
    }
}

#[test]
fn search_output_feeds_verify() {
    let out = q8deform(&["params", "search", "--degree-bound", "2", "--limit", "1"]);
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "found.params", &stdout(&out));
    let out = q8deform(&["verify", "--params-file", &path]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn report_from_saved_run_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for path in [&first, &second] {
        let out = q8deform(&["verify", "--preset", "example", "--format", "json", "--output", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let a = fs::read(&first).unwrap();
    assert_eq!(a, fs::read(&second).unwrap());

    let out = q8deform(&["report", "--input", first.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, a);

    let out = q8deform(&["report", "--input", first.to_str().unwrap(), "--format", "text"]);
    assert!(stdout(&out).contains("PASS    separability-negative-control"));
}

#[test]
fn report_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "junk.json", "{ not json");
    let out = q8deform(&["report", "--input", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn precision_override_is_echoed() {
    let out = q8deform(&["verify", "--check", "cocycle", "--precision", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["params"]["precision"], 4);
}
