//! End-to-end tests of the binary: report determinism, exit codes, and
//! error reporting.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trifactor"));
    cmd.current_dir(workspace_root());
    cmd
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_without_timestamp(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.contains("timestamp_epoch_seconds"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn square_dc_is_deterministic() {
    let a = run(&["square-dc", "data/m11.perm", "data/m11_stab.perm", "--seed", "7"]);
    let b = run(&["square-dc", "data/m11.perm", "data/m11_stab.perm", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(stdout_without_timestamp(&a), stdout_without_timestamp(&b));
}

#[test]
fn seed_variation_leaves_exact_results_unchanged() {
    let a = run(&["coxeter-table", "--seed", "0"]);
    let b = run(&["coxeter-table", "--seed", "99"]);
    assert!(a.status.success() && b.status.success());
    let parse = |o: &Output| -> serde_json::Value {
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["result"].clone()
    };
    assert_eq!(parse(&a), parse(&b));
}

#[test]
fn probabilistic_square_dc_agrees_with_exact() {
    let exact = run(&["square-dc", "data/m12.perm", "data/m12_stab.perm"]);
    let prob = run(&[
        "square-dc",
        "data/m12.perm",
        "data/m12_stab.perm",
        "--probabilistic",
        "--seed",
        "3",
    ]);
    let label = |o: &Output| {
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["result"]["witness_label"]
            .clone()
    };
    assert_eq!(label(&exact), label(&prob));
    assert_eq!(label(&exact), serde_json::json!(1));
}

#[test]
fn missing_file_is_exit_code_two() {
    let out = run(&["square-dc", "data/no_such.perm", "data/m11_stab.perm"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_error_reports_line_number_and_exit_two() {
    let dir = std::env::temp_dir().join("trifactor_cli_parse_test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.perm");
    std::fs::write(&bad, "degree 5\ngen (1,2\n").unwrap();
    let out = run(&[
        "square-dc",
        bad.to_str().unwrap(),
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.perm:2"), "stderr: {err}");
}

#[test]
fn order_assertion_failure_is_exit_two() {
    let dir = std::env::temp_dir().join("trifactor_cli_order_test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("claims.perm");
    std::fs::write(&bad, "degree 3\ngen (1,2)\norder 6\n").unwrap();
    let out = run(&["square-dc", bad.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_bound_is_exit_code_three() {
    let out = run(&[
        "square-dc",
        "data/alt5.perm",
        "data/alt5_stab.perm",
        "--bound",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tampered_data_makes_verify_all_fail_with_exit_one() {
    // copy the data directory but claim the whole group is the subgroup,
    // so no double coset can square to the group
    let dir = std::env::temp_dir().join("trifactor_cli_tamper_test");
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    for entry in std::fs::read_dir(workspace_root().join("data")).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.join(entry.file_name())).unwrap();
    }
    std::fs::copy(dir.join("m11.perm"), dir.join("m11_stab.perm")).unwrap();
    let out = run(&["verify-all", "--data", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["all_passed"], serde_json::json!(false));
}

#[test]
fn invalid_type_symbol_is_exit_two() {
    let out = run(&["dioid-verify", "--type", "Q5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn triple_check_accepts_an_explicit_element() {
    let out = run(&[
        "triple-check",
        "data/psl27.perm",
        "data/psl27_borel.perm",
        "--element",
        "(1,2)(5,6)",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["result"]["rank"], serde_json::json!(6));
    assert!(report["result"]["element_verdict"].is_boolean());
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join("trifactor_cli_out_test.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "hecke",
        "data/psl27.perm",
        "data/psl27_borel.perm",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(report["schema"], serde_json::json!(1));
    assert_eq!(report["result"]["rank"], serde_json::json!(6));
    std::fs::remove_file(&path).ok();
}

#[test]
fn schema_field_is_present_on_all_reports() {
    for args in [
        vec!["coxeter-table"],
        vec!["dioid-verify", "--type", "A2"],
        vec!["triple-check", "data/alt5.perm", "data/alt5_stab.perm"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["schema"], serde_json::json!(1), "{args:?}");
    }
}

#[allow(dead_code)]
fn data_path(name: &str) -> PathBuf {
    Path::new("data").join(name)
}
