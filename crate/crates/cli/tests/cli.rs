use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use exradii::format::{parse_csv, parse_json, IsoRow, PythRow};

fn exradii(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exradii"))
        .args(args)
        .env_remove("EXRADII_FORMAT")
        .output()
        .expect("run exradii")
}

fn stdout(args: &[&str]) -> String {
    let out = exradii(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name))
        .unwrap()
}

#[test]
fn paper_tables_match_golden_files() {
    for (format, file) in [
        ("table", "paper_tables.txt"),
        ("csv", "paper_tables.csv"),
        ("json", "paper_tables.json"),
        ("markdown", "paper_tables.md"),
    ] {
        assert_eq!(stdout(&["--format", format, "paper-tables"]), golden(file), "{format}");
    }
    assert_eq!(
        stdout(&["--format", "markdown", "paper-tables", "--verbatim-labels"]),
        golden("paper_tables_verbatim.md")
    );
}

#[test]
fn paper_tables_ignore_thread_count() {
    let one = stdout(&["--threads", "1", "--format", "csv", "paper-tables"]);
    let many = stdout(&["--threads", "8", "--format", "csv", "paper-tables"]);
    assert_eq!(one, many);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_exradii"))
        .arg("paper-tables")
        .env("EXRADII_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("paper_tables.csv"));
}

#[test]
fn check_prints_exact_metrics() {
    let text = stdout(&["check", "5", "5", "6"]);
    assert!(text.contains("12 (Heron)"));
    assert!(text.contains("ρ_a       4 (integer)"), "{text}");
    assert!(text.contains("ρ_c       6 (integer)"));

    let text = stdout(&["check", "1", "1", "1"]);
    assert!(text.contains("√3/4 (not Heron)"));
    assert!(text.contains("√(3/4) (irrational)"));

    let out = exradii(&["check", "1", "2", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("triangle inequality"));
}

#[test]
fn gen_f1_range_reproduces_table_rows() {
    let rows: Vec<IsoRow> =
        parse_csv(&stdout(&["--format", "csv", "gen", "f1", "--K", "1", "--range-mn", "6"])).unwrap();
    assert_eq!(rows.len(), 8);
    let got: BTreeSet<_> = rows.iter().map(|r| (r.alpha.0, r.beta.0)).collect();
    let want: BTreeSet<_> = parse_csv::<IsoRow>(&golden("paper_tables.csv"))
        .unwrap()
        .into_iter()
        .filter(|r| r.source == "F1")
        .map(|r| (r.alpha.0, r.beta.0))
        .collect();
    assert_eq!(got, want);
    let keys: Vec<_> = rows.iter().map(|r| (r.perimeter.0, r.alpha.0)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn gen_f2_range_reproduces_table_rows() {
    let rows: Vec<IsoRow> =
        parse_json(&stdout(&["--format", "json", "gen", "f2", "--L", "1", "--range-mn", "6"])).unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().any(|r| (r.alpha.0, r.beta.0, r.rho_alpha.to_string()) == (120, 61, "660".into())));
}

#[test]
fn gen_pyth_three_four_five() {
    let rows: Vec<PythRow> =
        parse_csv(&stdout(&["--format", "csv", "gen", "pyth", "--m", "2", "--n", "1", "--delta", "1"])).unwrap();
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    assert_eq!((r.alpha.0, r.beta.0, r.gamma.0), (5, 4, 3));
    assert_eq!((r.rho_alpha.0, r.rho_beta.0, r.rho_gamma.0), (6, 3, 2));

    let rows: Vec<PythRow> = parse_csv(&stdout(&[
        "--format", "csv", "gen", "pyth", "--m", "2", "--n", "1", "--orientation", "odd-beta",
    ]))
    .unwrap();
    assert_eq!((rows[0].beta.0, rows[0].rho_beta.0), (3, 2));
}

#[test]
fn gen_by_perimeter_matches_enumerator() {
    let rows: Vec<IsoRow> =
        parse_csv(&stdout(&["--format", "csv", "gen", "f1", "--max-perimeter", "200"])).unwrap();
    assert!(rows.iter().all(|r| r.source == "F1" && r.perimeter.0 <= 200));
    assert!(rows.iter().any(|r| (r.alpha.0, r.beta.0) == (20, 26)));
    let iso: Vec<IsoRow> =
        parse_csv(&stdout(&["--format", "csv", "gen", "iso-a", "--max-perimeter", "50"])).unwrap();
    assert!(iso.iter().any(|r| (r.alpha.0, r.beta.0) == (12, 10)));
}

#[test]
fn gen_invalid_params_exit_two() {
    for args in [
        &["gen", "f1", "--m", "3", "--n", "1"][..],
        &["gen", "f2", "--m", "6", "--n", "3"],
        &["gen", "iso-b", "--m", "1", "--n", "2"],
        &["gen", "f1"],
        &["gen", "pyth", "--m", "2", "--n", "1", "--delta", "0"],
    ] {
        assert_eq!(exradii(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_passes_and_reports() {
    let text = stdout(&["verify", "theorem1", "--max-perimeter", "500"]);
    assert!(text.trim_end().ends_with("PASS"));
    assert!(text.contains("missing from family     0"));
    let text = stdout(&["verify", "prop1", "--max-perimeter", "500", "--threads", "3"]);
    assert!(text.contains("prop1 violations  0"), "{text}");
    let json = stdout(&["--format", "json", "verify", "prop2", "--max-perimeter", "400"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"], "PASS");
    assert_eq!(v["oracle"], v["family"]);
}

#[test]
fn verify_bad_arguments_exit_two() {
    assert_eq!(exradii(&["verify", "theorem1", "--max-perimeter", "2"]).status.code(), Some(2));
    assert_eq!(exradii(&["verify", "theorem1"]).status.code(), Some(2));
}

#[test]
fn verify_progress_goes_to_stderr() {
    let out = exradii(&["verify", "prop1", "--max-perimeter", "100", "--progress", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("scanned 50/100"), "{err}");
    assert!(!String::from_utf8(out.stdout).unwrap().contains("scanned"));
}
