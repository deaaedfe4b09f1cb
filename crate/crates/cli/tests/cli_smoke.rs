//! End-to-end checks of the binary surface: output shapes, exit codes,
//! and the prime-field path.

use std::process::Command;

fn downup(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_downup"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn normal_form_rewrites_the_defining_relation() {
    let out = downup(&["normal-form", "y*x"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "z - x*y");
}

#[test]
fn normal_form_over_a_prime_field() {
    let out = downup(&["normal-form", "--field", "fp:32003", "7/2*y*x"]);
    assert!(out.status.success());
    // 7/2 mod 32003 = 7 * inv(2) = 7 * 16002 = 16005 mod 32003
    assert_eq!(stdout_of(&out).trim(), "16005*z + 15998*x*y");
}

#[test]
fn parse_errors_exit_2_with_offset() {
    let out = downup(&["normal-form", "x^-2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte 2"), "stderr: {err}");
    assert!(err.contains("negative exponent"), "stderr: {err}");
}

#[test]
fn characteristic_two_is_rejected_as_usage_error() {
    let out = downup(&["normal-form", "--field", "fp:2", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn diff_applies_the_differential() {
    let out = downup(&["diff", "v # (1)"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "t^u # (1)");
}

#[test]
fn reduce_reports_classes_and_witnesses() {
    let out = downup(&["reduce", "t # (x) - u # (y)"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("degree 1, weight 2"), "stdout: {text}");

    let out = downup(&["reduce", "t # (x*y - y*x)"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("boundary"));

    // a non-cocycle is rejected with its image
    let out = downup(&["reduce", "t # (y)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a cocycle"));
}

#[test]
fn homology_dims_emits_the_csv_table() {
    let out = downup(&["homology-dims", "--wmax", "6"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "i,w,dim_cochains,dim_Z,dim_B,dim_H,expected_H,match"
    );
    assert!(
        text.lines().any(|l| l.starts_with("3,4,") && l.ends_with(",1,1,true")),
        "missing the (3,4) row: {text}"
    );
    assert_eq!(text.lines().count(), 1 + 4 * 7);
}

#[test]
fn verify_tables_passes_over_a_large_prime_field() {
    let out = downup(&["verify-tables", "--field", "fp:32003", "--wmax", "8"]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("json");
    assert_eq!(report["field"], "fp:32003");
    assert_eq!(report["aggregate"], "pass-with-documented-corrections");
}

#[test]
fn verify_all_small_sweep_exits_zero() {
    let out = downup(&["verify-all", "--wmax", "6", "--seed", "1"]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("json");
    assert_eq!(report["aggregate"], "pass-with-documented-corrections");
    assert_eq!(report["active_product_rule"], "direct");
    assert_eq!(report["leibniz_sound"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["id"] == "complex:dsquare"));
    assert!(checks.iter().any(|c| c["id"] == "homology:dims"));
    // slice summaries are present without matrices by default
    let slices = report["slices"].as_array().unwrap();
    assert!(!slices.is_empty());
    assert!(slices.iter().all(|s| s.get("matrix").is_none()));
}

#[test]
fn verbose_includes_matrices() {
    let out = downup(&["verify-tables", "--wmax", "6", "--verbose"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("json");
    let slices = report["slices"].as_array().unwrap();
    assert!(slices.iter().any(|s| s.get("matrix").is_some()));
}
