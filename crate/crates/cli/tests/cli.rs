use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

const REFERENCE5: &str = "0,-5,2,0,4\n5,0,2,5,-6\n-2,-2,0,4,-9\n0,-5,-4,0,-8\n-4,6,9,8,0\n";

fn file(contents: &str, suffix: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn pcmtie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcmtie"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn as_rows(v: &Value) -> Vec<Vec<f64>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect())
        .collect()
}

#[test]
fn project_example_matrix() {
    let f = file(REFERENCE5, ".csv");
    let p = f.path().to_str().unwrap();
    let out = pcmtie(&["--scale", "additive", "--output", "json", "project", "--pair", "2", "3", p]);
    let v = json(&out);
    let expected = [
        [0.0, -3.5, 0.5, 0.0, 4.0],
        [3.5, 0.0, -1.0, 3.5, -7.5],
        [-0.5, 1.0, 0.0, 5.5, -7.5],
        [0.0, -3.5, -5.5, 0.0, -8.0],
        [-4.0, 7.5, 7.5, 8.0, 0.0],
    ];
    for (row, want) in as_rows(&v["matrix"]).iter().zip(expected) {
        for (a, b) in row.iter().zip(want) {
            assert!((a - b).abs() < 1e-9);
        }
    }
    let w: Vec<f64> = v["weights_after"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    for (a, b) in w.iter().zip([0.2, -0.3, -0.3, -3.4, 3.8]) {
        assert!((a - b).abs() < 1e-9);
    }
    assert_eq!(v["ranking_after"], serde_json::json!([[5], [1], [2, 3], [4]]));
}

#[test]
fn project_text_output() {
    let f = file(REFERENCE5, ".csv");
    let out = pcmtie(&["--scale", "additive", "project", "--pair", "2", "3", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("ranking after:  5 > 1 > {2, 3} > 4"), "{s}");
    assert!(s.contains("tolerances:"));
}

#[test]
fn project_json_is_a_fixed_point() {
    let f = file(REFERENCE5, ".csv");
    let first = pcmtie(&["--scale", "additive", "--output", "json", "project", "--pair", "2", "3", f.path().to_str().unwrap()]);
    let v1 = json(&first);
    let g = file(&stdout(&first), ".json");
    let v2 = json(&pcmtie(&["--output", "json", "project", "--pair", "2", "3", g.path().to_str().unwrap()]));
    let (m1, m2) = (as_rows(&v1["matrix"]), as_rows(&v2["matrix"]));
    for (r1, r2) in m1.iter().zip(&m2) {
        for (a, b) in r1.iter().zip(r2) {
            assert!((a - b).abs() < 1e-9);
        }
    }
    assert!(v2["distance"].as_f64().unwrap() < 1e-9);
}

#[test]
fn emi_of_example_matrix() {
    let f = file(REFERENCE5, ".csv");
    let p = f.path().to_str().unwrap();
    let out = pcmtie(&["--scale", "additive", "emi", "--pair", "2", "3", p]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("EMI: 1.7143"), "{s}");
    assert!(s.contains("nonzero entries: 14 of at most 14"));

    let csv = stdout(&pcmtie(&["--scale", "additive", "--output", "csv", "emi", "--pair", "2", "3", p]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 2);
    let emi: f64 = lines[1].split(',').nth(2).unwrap().parse().unwrap();
    assert!((emi - 24.0 / 14.0).abs() < 1e-12);
}

#[test]
fn tip_makes_winner_lead() {
    let f = file(REFERENCE5, ".csv");
    let v = json(&pcmtie(&[
        "--scale", "additive", "--output", "json", "tip", "--pair", "2", "3", "--winner", "3",
        "--delta", "0.01", f.path().to_str().unwrap(),
    ]));
    assert_eq!(v["verdict"]["passed"], Value::Bool(true));
    let w: Vec<f64> = v["weights"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!(w[2] > w[1]);
    assert!((w[2] - w[1] - 2.0 * 0.01 / 5.0).abs() < 1e-12);
}

#[test]
fn scan_of_consistent_matrix_is_free() {
    let zeros = "0,0,0,0\n0,0,0,0\n0,0,0,0\n0,0,0,0\n";
    let f = file(zeros, ".csv");
    let v = json(&pcmtie(&["--scale", "additive", "--output", "json", "scan", f.path().to_str().unwrap()]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for r in rows {
        assert_eq!(r["emi"].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn scan_fifteen_alternatives() {
    let n = 15;
    let mut text = String::new();
    for r in 0..n {
        let row: Vec<String> = (0..n)
            .map(|c| {
                let v = if r < c { ((r * 7 + c * 3) % 11) as f64 - 5.0 } else if r > c { 5.0 - ((c * 7 + r * 3) % 11) as f64 } else { 0.0 };
                v.to_string()
            })
            .collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    let f = file(&text, ".csv");
    let out = pcmtie(&["--scale", "additive", "--output", "csv", "scan", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let s = stdout(&out);
    let emis: Vec<f64> = s.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(emis.len(), n * (n - 1) / 2);
    assert!(emis.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn convert_round_trip() {
    let m = "1,2,0.25\n0.5,1,3\n4,0.3333333333333333,1\n";
    let f = file(m, ".csv");
    let add = pcmtie(&["--output", "json", "convert", "--to", "additive", f.path().to_str().unwrap()]);
    let g = file(&stdout(&add), ".json");
    let back = json(&pcmtie(&["--output", "json", "convert", "--to", "multiplicative", g.path().to_str().unwrap()]));
    let original = [[1.0, 2.0, 0.25], [0.5, 1.0, 3.0], [4.0, 1.0 / 3.0, 1.0]];
    for (row, want) in as_rows(&back["matrix"]).iter().zip(original) {
        for (a, b) in row.iter().zip(want) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn weights_with_names() {
    let f = file("a,b,c\n1,2,4\n0.5,1,2\n0.25,0.5,1\n", ".csv");
    let out = pcmtie(&["--names", "weights", "--normalize", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ranking: a > b > c"));
}

#[test]
fn exit_codes() {
    assert_eq!(pcmtie(&["validate", "/nonexistent/matrix.csv"]).status.code(), Some(2));

    let bad = file("1,2\n0.5,x\n", ".csv");
    let out = pcmtie(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let nonreciprocal = file("1,2\n0.6,1\n", ".csv");
    let p = nonreciprocal.path().to_str().unwrap();
    let out = pcmtie(&["validate", p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("(1, 2)"));
    assert_eq!(pcmtie(&["weights", p]).status.code(), Some(3));

    let ok = file(REFERENCE5, ".csv");
    let p = ok.path().to_str().unwrap();
    assert_eq!(pcmtie(&["--scale", "additive", "validate", p]).status.code(), Some(0));
    assert_eq!(pcmtie(&["--scale", "additive", "emi", "--pair", "2", "2", p]).status.code(), Some(4));
    assert_eq!(pcmtie(&["--scale", "additive", "emi", "--pair", "0", "2", p]).status.code(), Some(4));
    assert_eq!(
        pcmtie(&["--scale", "additive", "tip", "--pair", "2", "3", "--winner", "1", p]).status.code(),
        Some(4)
    );
    assert_eq!(
        pcmtie(&["--scale", "additive", "tip", "--pair", "2", "3", "--winner", "2", "--delta", "-1", p]).status.code(),
        Some(4)
    );
    assert_eq!(pcmtie(&["--tol-tie", "-1", "--scale", "additive", "scan", p]).status.code(), Some(4));
    assert_eq!(pcmtie(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(pcmtie(&["--help"]).status.code(), Some(0));
}
