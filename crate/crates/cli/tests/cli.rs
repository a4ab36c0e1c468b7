//! End-to-end behaviour of the `qcorr` binary.

use std::path::Path;
use std::process::{Command, Output};

use qcorr::bipartite::koashi_winter_discord;
use qcorr::tripartite::w;
use serde_json::Value;

fn qcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcorr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn num(v: &Value, key: &str) -> f64 {
    v[key]
        .as_f64()
        .unwrap_or_else(|| panic!("missing {key} in {v}"))
}

#[test]
fn analyze_named_states() {
    let ghz = stdout_json(&qcorr(&["--format", "json", "analyze", "ghz"]));
    assert!((num(&ghz, "D3") - 1.0).abs() < 1e-9);
    assert!((num(&ghz, "T") - 3.0).abs() < 1e-9);
    let w = stdout_json(&qcorr(&["--format", "json", "analyze", "w"]));
    assert!((num(&w, "D3") - 0.918296).abs() < 1e-6);
    let table = qcorr(&["analyze", "w_tilde:p=0"]);
    assert_eq!(code(&table), 0);
    let text = String::from_utf8(table.stdout).unwrap();
    assert!(!text.contains("-0.000000"), "{text}");
}

#[test]
fn analyze_csv_has_one_row() {
    let out = qcorr(&["--format", "csv", "analyze", "ghz"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2, "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&qcorr(&["--help"])), 0);
    assert_eq!(code(&qcorr(&["analyze", "not_a_state"])), 1);
    assert_eq!(code(&qcorr(&["--samples", "0", "verify"])), 1);
    assert_eq!(code(&qcorr(&["sweep", "w", "0.9", "0.1", "0.1"])), 1);
    assert_eq!(code(&qcorr(&["analyze", "/nonexistent/state.json"])), 2);
    assert_eq!(code(&qcorr(&["verify", "--qubits", "4", "--oracle"])), 1);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"parties\": [").unwrap();
    let out = qcorr(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
}

#[test]
fn non_psd_matrix_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let z = [0.0, 0.0];
    let m = serde_json::json!({
        "parties": ["a", "b"],
        "matrix": [
            [[0.6, 0.0], z, z, [0.5, 0.0]],
            [z, z, z, z],
            [z, z, z, z],
            [[0.5, 0.0], z, z, [0.4, 0.0]]
        ]
    });
    std::fs::write(&path, m.to_string()).unwrap();
    let out = qcorr(&["discord2q", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("eigenvalue"));
}

#[test]
fn verify_is_deterministic_and_flags_violations() {
    let args = [
        "--format",
        "json",
        "--samples",
        "120",
        "--seed",
        "3",
        "verify",
    ];
    let first = qcorr(&args);
    let second = qcorr(&args);
    assert_eq!(first.stdout, second.stdout);
    let report = stdout_json(&first);
    assert_eq!(report["n_samples"], 120);
    let any_violation = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["count_violated"].as_u64().unwrap() > 0);
    assert_eq!(code(&first), if any_violation { 4 } else { 0 });
}

#[test]
fn verify_larger_registers() {
    let out = qcorr(&["--samples", "30", "verify", "--qubits", "4"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["n_qubits"], 4);
    assert!(!report["exploratory"].as_array().unwrap().is_empty());
}

#[test]
fn sweep_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.csv");
    let out = qcorr(&[
        "sweep",
        "w_tilde",
        "0",
        "1",
        "0.05",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header.join(","), "p,family,T,J,D,T2,T3,J2,J3,D2,D3,tangle");
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 21);
    for r in &rows {
        let j: f64 = r[3].parse().unwrap();
        let d: f64 = r[4].parse().unwrap();
        assert!(d >= j - 1e-6, "{r:?}");
    }

    let ghz = qcorr(&["sweep", "ghz_tilde", "1", "1", "0.1"]);
    let text = String::from_utf8(ghz.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row.split(',').nth(2), Some("3.000000"));
}

#[test]
fn sweep_reports_crossover() {
    let out = qcorr(&["--format", "json", "sweep", "both", "0", "1", "0.05"]);
    assert_eq!(code(&out), 0);
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    let p = num(&summary, "crossover");
    assert!((0.70..=0.80).contains(&p), "{p}");
}

#[test]
fn dumped_reductions_feed_discord2q() {
    let dir = tempfile::tempdir().unwrap();
    let out = qcorr(&[
        "analyze",
        "w",
        "--dump-reductions",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let rho = w().density();
    for (i, j) in [("a", "b"), ("a", "c"), ("b", "c")] {
        let file = dir.path().join(format!("rho_{i}{j}.json"));
        assert!(Path::new(&file).exists());
        let res = stdout_json(&qcorr(&[
            "--format",
            "json",
            "discord2q",
            file.to_str().unwrap(),
        ]));
        let expected = koashi_winter_discord(&rho, i, j)
            .unwrap()
            .min(koashi_winter_discord(&rho, j, i).unwrap());
        let got = num(&res["symmetrized_discord"], "value");
        assert!((got - expected).abs() < 1e-3, "{res}");
    }
}
