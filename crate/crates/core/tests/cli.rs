use std::process::{Command, Output};

use serde_json::Value;
use spinor_s3::dirac::SpectrumRow;
use spinor_s3::exactnum::Rational;
use spinor_s3::polyring::SpinorSection;

fn spinor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor-s3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_table_rows() {
    let o = spinor(&["spectrum", "--k-max", "2", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<Vec<String>> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    let expect = [
        ["0", "-3/2", "2"],
        ["1", "3/2", "2"],
        ["1", "-5/2", "6"],
        ["2", "5/2", "6"],
        ["2", "-7/2", "12"],
    ];
    assert_eq!(
        rows,
        expect
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
}

#[test]
fn spectrum_json_round_trips() {
    let o = spinor(&["spectrum", "--k-max", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"k": 0, "eigenvalue": "-3/2", "multiplicity": 2}])
    );
    let rows: Vec<SpectrumRow> = serde_json::from_value(v).unwrap();
    assert_eq!(rows[0].eigenvalue, Rational::new(-3, 2));
}

#[test]
fn usage_errors_exit_2() {
    let o = spinor(&["spectrum", "--k-max", "999"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    assert_eq!(
        spinor(&["verify", "--suite", "casimir,nonsense"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        spinor(&["spectrum", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(spinor(&["eigenbasis"]).status.code(), Some(2));
    assert_eq!(spinor(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(spinor(&["eigenbasis", "--k", "13"]).status.code(), Some(2));
}

#[test]
fn eigenbasis_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k1.json");
    let o = spinor(&[
        "eigenbasis",
        "--k",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let first = std::fs::read(&path).unwrap();
    let v: Value = serde_json::from_slice(&first).unwrap();
    let sections = v["sections"].as_array().unwrap();
    assert_eq!(sections.len(), 8);
    assert_eq!(
        sections.iter().filter(|s| s["eigenvalue"] == "3/2").count(),
        2
    );
    assert_eq!(
        sections
            .iter()
            .filter(|s| s["eigenvalue"] == "-5/2")
            .count(),
        6
    );
    let order: Vec<(String, u64, u64)> = sections
        .iter()
        .map(|s| {
            (
                s["family"].as_str().unwrap().to_string(),
                s["q"].as_u64().unwrap(),
                s["p"].as_u64().unwrap(),
            )
        })
        .collect();
    let mut sorted = order.clone();
    sorted.sort_by_key(|(f, q, p)| (f != "plus", *q, *p));
    assert_eq!(order, sorted);
    for s in sections {
        let sec: SpinorSection = serde_json::from_value(s["section"].clone()).unwrap();
        assert_eq!(sec.k, 1);
        assert!(sec.is_harmonic());
    }

    let o = spinor(&[
        "eigenbasis",
        "--k",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read(&path).unwrap(),
        first,
        "output is not byte-deterministic"
    );
}

#[test]
fn eigenbasis_k0_constants() {
    let o = spinor(&["eigenbasis", "--k", "0", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sections = v["sections"].as_array().unwrap();
    assert_eq!(sections.len(), 2);
    for s in sections {
        assert_eq!(s["eigenvalue"], "-3/2");
        let sec: SpinorSection = serde_json::from_value(s["section"].clone()).unwrap();
        assert_eq!(
            sec.f.total_degree().unwrap_or(0) + sec.g.total_degree().unwrap_or(0),
            0
        );
        assert!(!sec.is_zero());
    }
}

#[test]
fn verify_casimir_cites_values() {
    let o = spinor(&["verify", "--suite", "casimir", "--k-max", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("= 168 Id"), "{out}");
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() == 26);
}

#[test]
fn verify_json_is_ordered() {
    let o = spinor(&[
        "verify",
        "--suite",
        "quadratic,casimir",
        "--k-max",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<(String, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["suite"].as_str().unwrap().to_string(),
                r["k"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(keys.first().unwrap(), &("casimir".to_string(), 0));
    assert_eq!(keys.last().unwrap(), &("quadratic".to_string(), 3));
    assert!(v.as_array().unwrap().iter().all(|r| r["passed"] == true));
}

#[test]
fn verify_integral_and_thread_bound() {
    let o = Command::new(env!("CARGO_BIN_EXE_spinor-s3"))
        .args([
            "verify",
            "--suite",
            "integral",
            "--samples",
            "200000",
            "--seed",
            "3",
        ])
        .env("SPINOR_S3_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("tensor-rule") && out.contains("monte-carlo"));
}

#[test]
fn quadrature_report_uses_twelve_digits() {
    let o = spinor(&["quadrature", "--max-degree", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rule"]["rule"], "tensor");
    let first = &v["rows"][0];
    assert_eq!(first["numeric_re"], "1.97392088022e1");
    assert_eq!(
        first["exact"],
        serde_json::json!({"unit": "2pi^2", "value": {"re": "1", "im": "0"}})
    );
}

#[test]
fn gram_report() {
    let o = spinor(&["gram", "--k", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diagonal"], true);
    assert_eq!(v["entries"][0][0]["value"]["re"], "1/2");
}
