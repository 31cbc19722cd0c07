use std::fs;
use std::process::Command;

use howe::cli::run_with_args;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_howe"))
}

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["howe"];
    argv.extend_from_slice(args);
    let code = run_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn rho_examples() {
    assert_eq!(run(&["rho", "--gl", "2", "2"]).1, "3/2, 1/2, -1/2, -3/2\n");
    assert_eq!(run(&["rho", "--sp", "3"]).1, "3, 2, 1\n");
    assert_eq!(run(&["rho", "--gl", "1", "2"]).1, "1, 0, -1\n");
}

#[test]
fn theta_examples() {
    let (code, out, _) = run(&["theta", "--pair", "u", "--m", "1", "--n", "1", "--p", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("tau' = (1/2 | -1/2)"), "{out}");
    assert!(out.contains("tau = (-1/2 | 1/2)"), "{out}");

    let (_, out, _) = run(&["theta", "--pair", "o", "--n", "2", "--p", "2", "--eps", "+1"]);
    assert!(out.contains("tau' = (1, 1)") && out.contains("tau = (-1, -1)"), "{out}");

    let (_, out, _) = run(&[
        "theta", "--pair", "u", "--m", "2", "--n", "2", "--p", "2", "--a", "2,1", "--b", "-1,-2", "--relaxed",
    ]);
    assert!(out.contains("tau = (-2, -3 | 3, 2)"), "{out}");
}

#[test]
fn theta_constraint_errors_name_the_inequality() {
    let (code, _, err) = run(&["theta", "--pair", "u", "--m", "2", "--n", "2", "--p", "2", "--a", "2,1", "--b", "-1,-2"]);
    assert_eq!(code, 1);
    assert!(err.contains("k + l <= p"), "{err}");
}

#[test]
fn check_examples() {
    let (code, out, _) = run(&["check", "--gl", "2", "2", "--weight", "-1,-2,2,1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Reducible\n"));
    assert!(out.contains("witness: alpha=e1-e4 value=1 unrescued"));

    let (_, out, _) = run(&["check", "--gl", "2", "2", "--weight", "-2,-3,3,2"]);
    assert!(out.starts_with("Irreducible\n"));

    let (_, out, _) = run(&["check", "--sp", "1", "--weight", "0"]);
    assert!(out.starts_with("Unknown\n"), "{out}");
}

#[test]
fn check_json_carries_the_witness() {
    let (_, out, _) = run(&["check", "--gl", "2", "2", "--weight", "-1,-2,2,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"]["status"], "Reducible");
    assert_eq!(v["verdict"]["witnesses"][0]["alpha"], serde_json::json!([1, 0, 0, -1]));
    assert_eq!(v["verdict"]["witnesses"][0]["value"], "1");
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(run(&["check", "--gl", "2", "2", "--weight", "1,2,3"]).0, 1);
    assert_eq!(run(&["check", "--gl", "2", "2", "--weight", "0.5,0,0,0"]).0, 1);
    assert_eq!(run(&["rho", "--sp", "0"]).0, 1);
    assert_eq!(run(&["rho"]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn sweep_summaries() {
    let (code, out, _) = run(&["sweep", "--pair", "u", "--m", "2", "--n", "2", "--p", "3", "--bound", "2"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("all irreducible: true\n"), "{out}");

    let (_, out, _) = run(&["sweep", "--pair", "sp", "--n", "3", "--p", "2", "--bound", "3"]);
    assert!(out.ends_with("all irreducible: true; non-integral rescues: yes\n"), "{out}");

    let (_, out, _) = run(&["sweep", "--pair", "sp", "--n", "1", "--p", "2", "--bound", "2"]);
    assert!(out.contains("all irreducible: false"), "{out}");
}

#[test]
fn sweep_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = |name: &str| {
        let path = dir.path().join(name);
        vec![
            "sweep".to_string(),
            "--pair".into(),
            "sp".into(),
            "--n".into(),
            "5".into(),
            "--p".into(),
            "3".into(),
            "--bound".into(),
            "4".into(),
            "--out".into(),
            path.to_str().unwrap().into(),
        ]
    };
    let first = bin().args(args("a.json")).env("HOWE_WORKERS", "1").output().unwrap();
    let second = bin().args(args("b.json")).env("HOWE_WORKERS", "4").output().unwrap();
    assert!(first.status.success() && second.status.success());
    let a = fs::read(dir.path().join("a.json")).unwrap();
    let b = fs::read(dir.path().join("b.json")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    assert_eq!(String::from_utf8(first.stdout).unwrap(), "all irreducible: true; non-integral rescues: yes\n");
}

#[test]
fn sweep_csv_has_one_row_per_sigma() {
    let (_, out, _) = run(&["sweep", "--pair", "u", "--m", "1", "--n", "1", "--p", "1", "--bound", "3", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("pair,m,n,p,bound,a,b,epsilon,tau,verdict,worst_pairing")
    );
    assert_eq!(lines.count(), 7);
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "pair = \"u\"\nm = 2\nn = 2\np = 2\nbound = 2\nformat = \"json\"\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let (code, out, _) = run(&["sweep", "--config", cfg]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["params"]["p"], 2);

    let (_, out, _) = run(&["sweep", "--config", cfg, "--p", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["params"]["p"], 3);
    assert_eq!(v["all_irreducible"], true);

    fs::write(dir.path().join("bad.toml"), "colour = 3\n").unwrap();
    let bad = dir.path().join("bad.toml");
    assert_eq!(run(&["sweep", "--config", bad.to_str().unwrap()]).0, 1);
}

#[test]
fn graded_examples() {
    let (code, out, _) = run(&["graded", "--o", "2", "2", "--dimE", "1", "--N", "5"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("equal: true\n"));
    assert!(out.contains("126 = 126"));

    let (_, out, _) = run(&["graded", "--sp", "2", "--dimE", "1", "--dimF", "1", "--N", "4"]);
    assert!(out.contains("210 = 210 = 210"), "{out}");

    let (_, out, _) = run(&["graded", "--sp", "1", "--N", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn binary_exit_codes() {
    let ok = bin().args(["check", "--gl", "2", "2", "--weight", "-1,-2,2,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = bin().args(["check", "--gl", "2", "2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = bin().args(["sweep", "--nonsense"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let workers = bin()
        .args(["sweep", "--pair", "u", "--m", "1", "--n", "1", "--p", "1", "--bound", "1"])
        .env("HOWE_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(workers.status.code(), Some(1));
}
