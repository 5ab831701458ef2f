//! End-to-end tests of the `elephant` binary: output shapes, exit-code
//! contract, and byte-for-byte reproducibility of seeded simulation.

use std::process::{Command, Output};

fn elephant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elephant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn poly_emits_exact_coefficients() {
    let out = elephant(&["poly", "--family", "R", "--n", "2", "--a", "1/2"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!(["-1/2", "0", "3/2"]));

    let out = elephant(&["poly", "--family", "V", "--n", "2"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!(["0", "-2", "0", "2"]));

    let out = elephant(&["poly", "--family", "R", "--n", "3", "--a", "0"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!(["0", "0", "0", "1"]));
}

#[test]
fn usage_errors_exit_2() {
    // unknown flag
    let out = elephant(&["poly", "--family", "R", "--n", "2", "--bogus", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // missing memory parameter for family R
    let out = elephant(&["poly", "--family", "R", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // parameter given for a parameter-free family
    let out = elephant(&["poly", "--family", "T", "--n", "2", "--a", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    // |a| > 1 rejected by the probabilistic commands
    let out = elephant(&["dist", "--n", "3", "--a", "3/2"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed rational
    let out = elephant(&["dist", "--n", "3", "--a", "1//2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certification_failures_exit_3() {
    // repeated roots at a = 0 (monomials) surface loudly
    let out = elephant(&["roots", "--family", "R", "--a", "0", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("squarefree"), "stderr: {stderr}");
}

#[test]
fn roots_reports_counts_and_interlacing() {
    let out = elephant(&[
        "roots",
        "--family",
        "R",
        "--a",
        "1/2",
        "--max-n",
        "6",
        "--check-interlacing",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = value.as_array().unwrap();
    assert_eq!(records.len(), 6);
    let total: usize = records
        .iter()
        .map(|r| r["roots"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 21);
    assert_eq!(records[0]["interlaced_with_next"], serde_json::json!(true));

    // degenerate family: counts 1, 0, 1, 2, 3, 4
    let out = elephant(&["roots", "--family", "S", "--a", "-1", "--max-n", "6"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let counts: Vec<usize> = value
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["roots"].as_array().unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 0, 1, 2, 3, 4]);
}

#[test]
fn roots_honors_custom_width() {
    let out = elephant(&[
        "roots", "--family", "R", "--a", "1", "--max-n", "2", "--width", "1/1024",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // R_2 = 2x^2 - 1: midpoints within the requested half-width of 1/sqrt(2)
    let mid = value[1]["roots"][1]["mid_float"].as_f64().unwrap();
    assert!((mid - std::f64::consts::FRAC_1_SQRT_2).abs() < 1.0 / 1024.0);
}

#[test]
fn dist_compares_methods_by_default() {
    let out = elephant(&["dist", "--n", "2", "--a", "-1/2"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["method"], "dp");
    let compared: Vec<&str> = value["compared_methods"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(compared, vec!["dp", "charfun", "brute", "closed"]);
    let rows = value["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["prob_num"], "3");
    assert_eq!(rows[1]["prob_den"], "4");

    // closed method rejected away from the special parameters
    let out = elephant(&["dist", "--n", "3", "--a", "1/3", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dist_csv_shape() {
    let out = elephant(&["dist", "--n", "1", "--a", "7/10", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,prob_num,prob_den,prob_float"));
    assert_eq!(lines.next(), Some("-1,1,2,0.5"));
    assert_eq!(lines.next(), Some("1,1,2,0.5"));
}

#[test]
fn simulate_is_byte_identical_across_runs() {
    let args = [
        "simulate", "--n", "12", "--a", "3/5", "--samples", "20000", "--seed", "42",
    ];
    let first = elephant(&args);
    let second = elephant(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "seeded runs must match byte for byte");
    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(value["rng"], "chacha8");
    let tv = value["tv_vs_exact"].as_f64().unwrap();
    assert!(tv < 0.05, "tv {tv}");
}

#[test]
fn verify_suites_report_and_exit_cleanly() {
    let out = elephant(&[
        "verify", "--suite", "eulerian", "--max-n", "6", "--format", "text",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("[PASS]")), "{text}");

    let out = elephant(&["verify", "--suite", "nonorthogonality"]);
    assert!(out.status.success());

    let out = elephant(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn moments_table_matches_known_values() {
    let out = elephant(&["moments", "--a", "1", "--max-n", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(values, vec!["1", "4", "9", "16", "25"]);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("elephant-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r2.json");
    let out = elephant(&[
        "poly", "--family", "R", "--n", "2", "--a", "1/2", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"3/2\""));
    std::fs::remove_file(&path).ok();
}
