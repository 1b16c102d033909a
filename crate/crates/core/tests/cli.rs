use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ttw-susy"));
    c.env_remove("TTW_SUSY_CONFIG");
    c
}

const SMALL: &str = r#"{
  "params": [{"k": 2.0, "a": 1.5, "b": 2.5, "omega": 1.0}],
  "truncation": {"nmax_radial": 3, "nmax_sector": 2},
  "quadrature": {"radial": 24, "angular": 24, "cross": 16},
  "sample_points": 5
}"#;

#[test]
fn json_report_for_selected_suites() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    let out = dir.path().join("report.json");
    std::fs::write(&cfg, SMALL).unwrap();
    let status = bin()
        .args(["verify", "--suite", "specfun", "--suite", "model", "--format", "json", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["suite"] == "specfun" || c["suite"] == "model"));
    assert!(checks.iter().any(|c| c["suite"] == "model"));
    assert_eq!(report["summary"]["failed"], 0);
    assert_eq!(report["summary"]["total"].as_u64().unwrap() as usize, checks.len());
}

#[test]
fn config_path_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"suites": ["specfun"], "tolerances": {"quadrature": 1e-30}}"#).unwrap();
    let out = bin().args(["verify"]).env("TTW_SUSY_CONFIG", &cfg).output().unwrap();
    // the impossible tolerance makes the moment checks fail
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(!text.contains("model"));
}

#[test]
fn command_line_overrides() {
    let out = bin()
        .args(["verify", "--suite", "algebra", "--param", "k=1.5,a=1,b=2", "--nmax", "2,2", "--seed", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("k=1.5000,a=1,b=2,w=1"));
}

#[test]
fn usage_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"truncation": {"nmax_radial": 1, "nmax_sector": 1}}"#).unwrap();
    assert_eq!(bin().args(["verify", "--config"]).arg(&bad).output().unwrap().status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(bin().args(["verify", "--config"]).arg(&missing).output().unwrap().status.code(), Some(3));
    let out = bin().args(["verify", "--param", "k=0,a=1,b=1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["verify", "--suite", "plots"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
