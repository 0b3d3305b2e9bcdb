use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_drinfeld");

fn drinfeld(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn census_json_counts_six_classes() {
    let out = drinfeld(&["census", "--p", "3", "--s", "1", "--P", "T", "--m", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n_classes"], 6);
    assert_eq!(v["exponent_reading"], "floor(m*d/2) and floor((m-2)*d/2)");
}

#[test]
fn charpoly_of_tau_plus_tau_squared() {
    let out = drinfeld(&[
        "charpoly", "--p", "3", "--s", "1", "--P", "T", "--m", "1", "--a2", "1", "--a3", "1",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["c"], "2");
    assert_eq!(v["mu"], 2);
    assert_eq!(v["supersingular"], false);
    assert_eq!(v["solutions"], 1);
}

#[test]
fn characteristic_two_is_a_usage_error() {
    let out = drinfeld(&["census", "--p", "2", "--s", "1", "--P", "T", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("characteristic 2 unsupported"));
}

#[test]
fn malformed_polynomial_reports_a_position() {
    let out = drinfeld(&["census", "--p", "3", "--P", "T^2+*", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("position 4"), "{}", stderr(&out));
}

#[test]
fn unknown_flags_are_rejected() {
    let out = drinfeld(&["census", "--p", "3", "--P", "T", "--m", "1", "--seed", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scale_guard_exits_three() {
    let out = drinfeld(&["census", "--p", "3", "--P", "T", "--m", "9", "--max-work", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("scale guard"));
}

#[test]
fn supersingular_endo_is_refused() {
    let out = drinfeld(&["endo", "--p", "3", "--P", "T", "--m", "1", "--a2", "0", "--a3", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn endo_of_a_maximal_order() {
    let out = drinfeld(&[
        "endo", "--p", "3", "--P", "T", "--m", "1", "--a2", "1", "--a3", "1", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["disc"], "T+1");
    assert_eq!(v["measured_f"], "1");
    assert_eq!(v["is_maximal"], true);
}

#[test]
fn grid_rows_for_the_odd_cases() {
    let out = drinfeld(&[
        "grid", "--point", "3,1,T,1", "--point", "3,1,T,3", "--brute-force", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["n_classes"], 6);
    assert_eq!(rows[0]["classes_match"], "MATCH");
    assert_eq!(rows[0]["chi_match"], "MISMATCH");
    assert_eq!(rows[0]["sweep"], "EXACT");
    assert_eq!(rows[1]["n_classes"], 14);
    assert_eq!(rows[1]["classes_match"], "MATCH");
}

#[test]
fn grid_over_budget_is_skipped_with_a_warning() {
    let out = drinfeld(&["grid", "--point", "3,1,T,3", "--max-work", "10", "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(",skipped,"));
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn csv_output_lists_classes() {
    let out = drinfeld(&["chi-census", "--p", "3", "--P", "T", "--m", "1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("c,mu,label,chi"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("drinfeld-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("field.json");
    let out = drinfeld(&[
        "field-info", "--p", "3", "--n", "2", "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["modulus_l"], "[1,0,1]");
    std::fs::remove_dir_all(&dir).unwrap();
}
