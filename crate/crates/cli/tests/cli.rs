use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn weylpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylpoly")).args(args).env_remove("WEYLPOLY_CAP").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn compute_prints_known_values() {
    let out = weylpoly(&["compute", "--family", "tildeD", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "4x + 16x^2 + 4x^3");

    let out = weylpoly(&["compute", "--family", "Dq", "--n", "3", "--q", "0"]);
    assert_eq!(stdout(&out).trim(), "1 + 4x + x^2");

    let out = weylpoly(&["compute", "--family", "tildeB", "--n", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json.to_string().contains("28"), "{json}");

    let out = weylpoly(&["compute", "--family", "refined_T", "--n", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--family", "nope", "--n", "3"][..],
        &["compute", "--family", "tildeD", "--n", "3", "--q", "2"],
        &["compute", "--family", "Tq", "--n", "3", "--q", "x"],
        &["verify", "--suite", "nope"],
        &["verify", "--suite", "oracles", "--max-n", "1"],
        &["verify", "--suite", "oracles", "--q-samples", "0"],
        &["--cap-override", "0", "compute", "--family", "B", "--n", "3"],
        &["frobnicate"],
    ] {
        let out = weylpoly(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn cap_env_and_override() {
    let bin = env!("CARGO_BIN_EXE_weylpoly");
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(bin);
        cmd.env_remove("WEYLPOLY_CAP");
        if let Some(v) = env {
            cmd.env("WEYLPOLY_CAP", v);
        }
        cmd.args(extra).args(["compute", "--family", "B", "--n", "4"]).output().unwrap()
    };
    assert_eq!(code(&run(None, &[])), 0);
    assert_eq!(code(&run(Some("3"), &[])), 2);
    assert_eq!(code(&run(Some("3"), &["--cap-override", "4"])), 0);
    assert_eq!(code(&run(None, &["--cap-override", "3"])), 2);
}

#[test]
fn paper_table_suite_passes_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = weylpoly(&["verify", "--suite", "paper_tables", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let written = fs::read_to_string(&path).unwrap();

    let again = weylpoly(&["report", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&again), 0);
    assert_eq!(stdout(&again), written);

    let md = weylpoly(&["report", "--input", path.to_str().unwrap()]);
    assert!(stdout(&md).contains("passed, 0 failed"));
}

#[test]
fn failures_are_listed_first_in_markdown() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = weylpoly(&["verify", "--suite", "paper_tables", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let mut report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let entries = report["entries"].as_array_mut().unwrap();
    let last = entries.last_mut().unwrap();
    last["verdict"] = "fail".into();
    last["witness"] = serde_json::json!({"injected": true});
    let failing = last["check_id"].as_str().unwrap().to_string();
    fs::write(&path, serde_json::to_string(&report).unwrap()).unwrap();

    let md = stdout(&weylpoly(&["report", "--input", path.to_str().unwrap()]));
    let first_row = md.lines().find(|l| l.starts_with("| ") && !l.starts_with("| verdict")).unwrap();
    assert!(first_row.contains("FAIL") && first_row.contains(&failing), "{first_row}");
    assert!(md.contains("injected"));
}

#[test]
fn malformed_reports_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{\"entries\": [{\"check_id\": 3}]}").unwrap();
    assert_eq!(code(&weylpoly(&["report", "--input", path.to_str().unwrap()])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&weylpoly(&["report", "--input", missing.to_str().unwrap()])), 2);
}

#[test]
fn job_count_does_not_change_the_report() {
    let strip = |out: Output| -> Value {
        assert_eq!(code(&out), 0);
        let mut v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        for e in v["entries"].as_array_mut().unwrap() {
            e.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let one = strip(weylpoly(&["verify", "--suite", "oracles", "--max-n", "4", "--jobs", "1"]));
    let four = strip(weylpoly(&["verify", "--suite", "oracles", "--max-n", "4", "--jobs", "4"]));
    assert_eq!(one, four);
}
