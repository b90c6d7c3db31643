use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use iklp_core::report::CheckReport;
use serde_json::Value;

fn iklp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iklp"))
        .args(args)
        .env_remove("IKLP_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn jsonl(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn uniform_text() {
    let o = iklp(&["uniform", "--m", "1", "--d", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3 + 2t\n");
}

#[test]
fn uniform_json() {
    let o = iklp(&["uniform", "--m", "2", "--d", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["6", "5"]));
    assert!(v.get("b_natural").is_none());
}

#[test]
fn uniform_b_transform() {
    let o = iklp(&["uniform", "--m", "1", "--d", "7", "--b-transform"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("B (n = deg Q): "));
    assert!(lines[2].starts_with("B (n = 3): "));
}

#[test]
fn uniform_rejects_zero_m() {
    assert_eq!(code(&iklp(&["uniform", "--m", "0", "--d", "3"])), 2);
    assert_eq!(code(&iklp(&["uniform", "--m", "x", "--d", "3"])), 2);
}

#[test]
fn paving_passes() {
    let o = iklp(&["paving", "--m", "2", "--d", "3", "--lambda", "1:1"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("Q = 5 + 3t\nstatus: PASS\n"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn paving_not_matroidal_is_not_a_failure() {
    let o = iklp(&["paving", "--m", "1", "--d", "3", "--lambda", "1:10", "--json"]);
    assert_eq!(code(&o), 0);
    let v = &jsonl(&stdout(&o))[0];
    assert_eq!(v["status"], "NOT_MATROIDAL");
    assert_eq!(v["coeffs"], serde_json::json!(["-7", "-18"]));
}

#[test]
fn paving_usage_errors() {
    assert_eq!(code(&iklp(&["paving", "--m", "2", "--d", "3", "--lambda", "3:1"])), 2);
    assert_eq!(code(&iklp(&["paving", "--m", "2", "--d", "3", "--lambda", "1-1"])), 2);
    assert_eq!(code(&iklp(&["paving", "--m", "2", "--d", "1", "--lambda", "1:1"])), 2);
}

#[test]
fn paving_duplicate_keys_are_summed() {
    let a = iklp(&["paving", "--m", "3", "--d", "7", "--lambda", "1:1,2:1,1:1", "--json"]);
    let b = iklp(&["paving", "--m", "3", "--d", "7", "--lambda", "1:2,2:1", "--json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn paving_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = iklp(&["paving", "--m", "4", "--d", "9", "--lambda", "1:1,3:2", "--json", "-o", path_str(&path)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    let report: CheckReport = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim_end());
    assert_eq!(report.input.lambda(3), 2);
}

#[test]
fn check_batch() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.jsonl");
    fs::write(
        &input,
        "{\"m\":2,\"d\":3,\"lambda\":{\"1\":1}}\n\n{\"m\":1,\"d\":3,\"lambda\":{\"1\":10}}\n",
    )
    .unwrap();
    let o = iklp(&["check", path_str(&input)]);
    assert_eq!(code(&o), 0);
    let reports = jsonl(&stdout(&o));
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["status"], "PASS");
    assert_eq!(reports[1]["status"], "NOT_MATROIDAL");
}

#[test]
fn check_empty_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.jsonl");
    fs::write(&input, "").unwrap();
    let o = iklp(&["check", path_str(&input)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
}

#[test]
fn check_malformed_line_keeps_going() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.jsonl");
    fs::write(&input, "{\"m\":2,\"d\":3,\"lambda\":{\"1\":1}}\nnot json\n{\"m\":2,\"d\":3,\"lambda\":{\"5\":1}}\n").unwrap();
    let o = iklp(&["check", path_str(&input)]);
    assert_eq!(code(&o), 1);
    let entries = jsonl(&stdout(&o));
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0]["status"], "PASS");
    assert_eq!(entries[1]["error"], "parse");
    assert_eq!(entries[1]["line"], 2);
    assert_eq!(entries[2]["error"], "parse");
}

#[test]
fn check_restricted_checks() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.jsonl");
    fs::write(&input, "{\"m\":3,\"d\":9,\"lambda\":{\"2\":1}}\n").unwrap();
    let o = iklp(&["check", path_str(&input), "--checks", "log_concave,positivity"]);
    assert_eq!(code(&o), 0);
    let v = &jsonl(&stdout(&o))[0];
    assert_eq!(v["checks"]["log_concave"]["status"], "PASS");
    assert_eq!(v["checks"]["hadamard_real_rooted"]["status"], "SKIPPED");
}

#[test]
fn check_missing_file_is_io_error() {
    assert_eq!(code(&iklp(&["check", "/nonexistent/input.jsonl"])), 3);
}

#[test]
fn scan_paving_is_deterministic() {
    let args = ["scan", "--d-max", "9", "--m-max", "5", "--lambda-max", "2", "--seed", "42"];
    let a = iklp(&args);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    let summary = stderr(&a);
    assert!(summary.contains(" cases, ") && summary.contains(" 0 fail, "), "{summary}");
    let b = iklp(&args);
    assert_eq!(a.stdout, b.stdout);

    let parallel = Command::new(env!("CARGO_BIN_EXE_iklp"))
        .args(args)
        .env("IKLP_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(a.stdout, parallel.stdout);

    for r in jsonl(&stdout(&a)) {
        assert!(r["status"] == "PASS" || r["status"] == "NOT_MATROIDAL", "{r}");
    }
}

#[test]
fn scan_summary_line_counts() {
    let o = iklp(&["scan", "--d-max", "5", "--m-max", "2", "--profiles", "3", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    let reports = jsonl(&stdout(&o));
    let nm = reports.iter().filter(|r| r["status"] == "NOT_MATROIDAL").count();
    let line = stderr(&o);
    let expected = format!("{} cases, {} pass, 0 fail, {nm} not-matroidal", reports.len(), reports.len() - nm);
    assert_eq!(line.trim(), expected);
}

#[test]
fn scan_families_with_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("summary.csv");
    let o = iklp(&["scan", "--families", "p2", "--n-max", "6", "--summary", path_str(&csv_path)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let reports = jsonl(&stdout(&o));
    assert_eq!(reports.len(), 8);
    assert!(reports.iter().all(|r| r["status"] == "PASS" && r["closed_form"]["status"] == "PASS"));
    let text = fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,d,m_or_h,verdict,witness"));
    assert_eq!(lines.next(), Some("P2,3,7,1,PASS,"));
}

#[test]
fn scan_usage_and_io_errors() {
    assert_eq!(code(&iklp(&["scan", "--d-min", "1"])), 2);
    assert_eq!(code(&iklp(&["scan", "--jobs", "0", "--d-max", "3"])), 2);
    assert_eq!(code(&iklp(&["scan", "--families", "p7"])), 2);
    assert_eq!(code(&iklp(&["scan", "--d-max", "3", "-o", "/nonexistent/dir/out.jsonl"])), 3);
}

#[test]
fn lemma_single_and_grid() {
    let o = iklp(&["lemma", "L_M1", "--m", "1", "--d", "3"]);
    assert_eq!(code(&o), 0);
    let v = &jsonl(&stdout(&o))[0];
    assert_eq!(v["lemma"], "L_M1");
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["wronskian_constant"], "-4");
    assert_eq!(v["left"], serde_json::json!(["3", "2"]));

    let o = iklp(&["lemma", "hm", "--m", "1..3", "--h", "1..3", "--d", "3..7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(jsonl(&stdout(&o)).len(), 6 * 5);
    assert_eq!(code(&iklp(&["lemma", "L_HH1", "--d", "5"])), 2);
    assert_eq!(code(&iklp(&["lemma", "L_MD", "--m", "2", "--d", "2"])), 2);
}

#[test]
fn interlace_verdicts() {
    let o = iklp(&["interlace", "--f", "3,4,1", "--g", "2,1"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["relation"], "G_INTERLACES_F");

    let o = iklp(&["interlace", "--f", "4,5,1", "--g", "6,5,1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["relation"], "NOT_ALTERNATING");
    assert!(v["witness"].is_array());

    assert_eq!(code(&iklp(&["interlace", "--f", "1,0,1", "--g", "1,1"])), 1);
    assert_eq!(code(&iklp(&["interlace", "--f", "1,-1", "--g", "1,1"])), 2);
}
