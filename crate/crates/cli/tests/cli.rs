use std::process::{Command, Output};

fn sturmian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sweep_reproduces_anchors() {
    let out = sturmian(&["sweep-m", "--slope", "golden", "--nmax", "70", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m");
    assert_eq!(lines.len(), 71);
    assert!(lines.contains(&"55,13"));
    assert!(lines.contains(&"65,0"));
}

#[test]
fn sweep_json_matches_csv() {
    let csv = stdout(&sturmian(&["sweep-m", "--slope", "golden", "--nmax", "12", "--format", "csv"]));
    let json = stdout(&sturmian(&["sweep-m", "--slope", "golden", "--nmax", "12", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["lambda"], 1);
    let rows: Vec<String> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| format!("{},{}", p[0], p[1]))
        .collect();
    assert_eq!(rows, csv.lines().skip(1).collect::<Vec<_>>());
}

#[test]
fn parity_passes() {
    let out = sturmian(&["parity", "--slope", "quad:0,1,3,3", "--nmax", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "100/100 pass");
}

#[test]
fn guard_violation_exits_3() {
    let out = sturmian(&["word", "--slope", "rat:1/2:2", "--length", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("k=2"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["word", "--slope", "nope", "--length", "3"][..],
        &["word", "--slope", "golden", "--length", "0"],
        &["factors", "--slope", "golden"],
        &["frobnicate"],
        &["bseq", "--slope", "rat:1/2", "--kmax", "1"],
    ] {
        assert_eq!(sturmian(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn word_formats() {
    let out = sturmian(&["word", "--slope", "invsqrt3", "--length", "6"]);
    assert_eq!(stdout(&out), "101011\n");
    let json = stdout(&sturmian(&["word", "--slope", "quad:3,-1,2,5", "--length", "5", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["word"], "01001");
}

#[test]
fn bseq_check_and_csv() {
    let out = sturmian(&["bseq", "--slope", "quad:3,-1,2,5", "--kmax", "200", "--check", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,B,case,parity_predicted");
    assert_eq!(lines[3], "3,0,LOW,0");
    assert_eq!(lines[4], "4,2,MID,0");
    assert_eq!(lines.len(), 201);
}

#[test]
fn gram_and_atlas() {
    let out = sturmian(&["gram", "--slope", "quad:3,-1,2,5", "--n", "2", "--lambda", "1"]);
    assert_eq!(stdout(&out), "2\n");
    let out = sturmian(&["atlas", "--n", "12", "--count", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,intervals,distinct\n12,46,46\n");
    let json = stdout(&sturmian(&["atlas", "--n", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let reps: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["rep"].as_str().unwrap()).collect();
    assert_eq!(reps, ["1/4", "2/5", "3/5", "3/4"]);
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = sturmian(&[
        "sweep-m", "--slope", "golden", "--nmax", "10", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("n,m\n1,1\n"));
}

#[test]
fn verify_quick_is_deterministic() {
    let a = sturmian(&["verify", "--quick", "--seed", "7"]);
    let b = sturmian(&["verify", "--quick", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("seed 7\n"));
    assert!(text.trim_end().ends_with("16/16 checks passed"));
}
