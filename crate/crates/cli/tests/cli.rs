use std::process::{Command, Output};

use ptdarboux::verify::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptdarboux"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn verify_defaults_pass() {
    let out = run(&["verify", "--alpha", "1", "--n-max", "10"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("name,computed,reference,abs_dev,rel_dev,tolerance,passed\n"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["verify", "--n-max", "-3"])), 2);
    assert_eq!(code(&run(&["verify", "--alpha", "0"])), 2);
    assert_eq!(code(&run(&["verify", "--tol", "bogus=1e-3"])), 2);
    assert_eq!(code(&run(&["verify", "--tol", "residual"])), 2);
    assert_eq!(code(&run(&["verify", "--grid-points", "10"])), 2);
    assert_eq!(code(&run(&["tabulate", "--points", "1"])), 2);
    assert_eq!(code(&run(&["identity", "--which", "even"])), 2);
    assert_eq!(code(&run(&["identity", "--which", "even", "--m", "1", "--n", "1"])), 2);
    assert_eq!(code(&run(&["spectrum", "--count", "11"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn unattainable_tolerance_exits_one() {
    let out = run(&["verify", "--n-max", "2", "--grid-points", "200", "--tol", "residual=1e-20"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("residual[k=2]"));
}

#[test]
fn unwritable_output_exits_two() {
    let out = run(&["spectrum", "--output", "/nonexistent-dir/report.csv"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "--n-max",
        "3",
        "--grid-points",
        "400",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(report.overall);
    assert_eq!(report.parameters.k_max, 5);
    let mut again = serde_json::to_string_pretty(&report).unwrap();
    again.push('\n');
    assert_eq!(again, text);
}

#[test]
fn tabulate_ground_state() {
    let out = run(&["tabulate", "--n", "0", "--points", "5"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 5);
    for r in &rows {
        assert!(num(&r[3]).abs() <= 1e-10);
    }
    for r in [&rows[0], &rows[4]] {
        assert!(num(&r[1]).abs() < 1e-15 && num(&r[2]).abs() < 1e-15);
    }
}

#[test]
fn tabulate_odd_state_midpoint_node() {
    let out = run(&["tabulate", "--n", "1", "--points", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let mid = &v["rows"][2];
    assert!(mid["chi"].as_f64().unwrap().abs() < 1e-14);
    assert!(mid["psi"].as_f64().unwrap().abs() < 1e-14);
    assert_eq!(v["k"], 3);
}

fn identity_deviation(args: &[&str]) -> f64 {
    let out = run(args);
    assert_eq!(code(&out), 0, "{args:?}");
    num(&csv_rows(&out)[0][1])
}

#[test]
fn identity_subcommand() {
    assert!(identity_deviation(&["identity", "--which", "base", "--n", "0"]) <= 1e-9);
    assert!(identity_deviation(&["identity", "--which", "even", "--m", "2"]) <= 1e-9);
    assert!(identity_deviation(&["identity", "--which", "odd", "--m", "0"]) <= 1e-10);
    assert!(identity_deviation(&["identity", "--which", "odd", "--m", "4", "--alpha", "3"]) <= 1e-9);
    let strict = run(&["identity", "--which", "even", "--m", "3", "--tol", "identity=1e-18"]);
    assert_eq!(code(&strict), 1);
}

#[test]
fn spectrum_subcommand() {
    let out = run(&["spectrum"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&out);
    let exact: Vec<f64> = rows.iter().map(|r| num(&r[2])).collect();
    assert_eq!(exact, [16.0, 36.0, 64.0]);
    assert!(rows.iter().all(|r| num(&r[4]) < 1e-2));

    let out = run(&["spectrum", "--alpha", "2"]);
    let exact: Vec<f64> = csv_rows(&out).iter().map(|r| num(&r[2])).collect();
    assert_eq!(exact, [64.0, 144.0, 256.0]);

    let out = run(&["spectrum", "--count", "0"]);
    assert_eq!(code(&out), 0);
    assert!(csv_rows(&out).is_empty());
}
