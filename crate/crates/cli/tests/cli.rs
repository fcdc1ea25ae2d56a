//! End-to-end tests driving the compiled `palucas` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn palucas() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_palucas"));
    // Keep the environment deterministic for precedence tests.
    cmd.env_remove("PALUCAS_PRECISION");
    cmd
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("palucas-test-{}-{name}", std::process::id()))
}

#[test]
fn search_palindromic_reports_no_hits() {
    let out = palucas().args(["search", "--n-max", "1000"]).output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("no palindromic hits among L_n for n <= 1000"));
}

#[test]
fn search_two_block_lists_known_values() {
    let out = palucas()
        .args(["search", "--mode", "two-block"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    for value in ["11", "18", "29", "47", "76", "199", "322"] {
        assert!(text.contains(&format!(": {value} [")), "missing {value}");
    }
}

#[test]
fn bounds_prints_absolute_n_bound() {
    let out = palucas()
        .args(["bounds", "--precision", "300"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("n <= 9e45"));
}

#[test]
fn precision_flag_beats_environment() {
    // An unparsable environment value is ignored when the flag is set.
    let out = palucas()
        .env("PALUCAS_PRECISION", "not-a-number")
        .args(["bounds", "--precision", "300"])
        .output()
        .unwrap();
    assert!(out.status.success());

    // Without the flag, the same value is a hard error.
    let out = palucas()
        .env("PALUCAS_PRECISION", "not-a-number")
        .arg("bounds")
        .output()
        .unwrap();
    assert!(!out.status.success());

    // A valid environment value is honored; 100 digits is below the
    // pipeline floor, so `full` must refuse it.
    let out = palucas()
        .env("PALUCAS_PRECISION", "100")
        .arg("full")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn full_writes_certificate_and_explain_reads_it_back() {
    let cert_path = temp_path("cert.toml");
    let out = palucas()
        .args(["full", "--precision", "250", "--out"])
        .arg(&cert_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "full run failed: {}", stdout(&out));
    let report = stdout(&out);
    assert!(report.contains("verdict: no solutions"));
    assert!(report.contains("no palindromic hits for n <= 1000"));

    let out = palucas().arg("explain").arg(&cert_path).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\u{2113} < 52"));
    assert!(text.contains("m < 54"));
    assert!(text.contains("n < 269"));
    assert!(text.contains("verdict: no solutions"));
    std::fs::remove_file(&cert_path).ok();
}

#[test]
fn explain_rejects_missing_and_malformed_input() {
    let out = palucas()
        .args(["explain", "/nonexistent/cert.toml"])
        .output()
        .unwrap();
    assert!(!out.status.success());

    let bad_path = temp_path("bad.toml");
    std::fs::write(&bad_path, "schema_version = \"nope\"").unwrap();
    let out = palucas().arg("explain").arg(&bad_path).output().unwrap();
    assert!(!out.status.success());
    std::fs::remove_file(&bad_path).ok();
}
