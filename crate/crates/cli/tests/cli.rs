//! End-to-end tests that spawn the real `chainsaw` binary and check stdout,
//! stderr, exit codes, and `--out` file emission.

use std::path::Path;
use std::process::{Command, Output};

fn chainsaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chainsaw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn survivor_prints_the_label() {
    let out = chainsaw(&["survivor", "--n", "605", "--k", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "472\n");
}

#[test]
fn usage_errors_exit_two() {
    let zero = chainsaw(&["survivor", "--n", "0", "--k", "3"]);
    assert_eq!(zero.status.code(), Some(2));
    let unknown = chainsaw(&["survivor", "--n", "5", "--k", "2", "--bogus"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing = chainsaw(&["survivor", "--n", "5"]);
    assert_eq!(missing.status.code(), Some(2));
    let text = chainsaw(&["survivor", "--n", "five", "--k", "2"]);
    assert_eq!(text.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = chainsaw(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("survivor"));
    assert!(stdout(&out).contains("card-trick"));
}

#[test]
fn order_matches_the_worked_example() {
    let out = chainsaw(&["order", "--n", "10", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,2,4,5,7,8,0,3,9\n");
}

#[test]
fn depletion_order_ends_with_the_predicted_cards() {
    let out = chainsaw(&["order", "--n", "52", "--k", "3", "--deplete"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("44,0,16,32,48"));
}

#[test]
fn elim_time_prints_the_ordinal() {
    let out = chainsaw(&["elim-time", "--n", "52", "--k", "3", "--soldier", "48"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "52\n");
}

#[test]
fn simulate_streams_events() {
    let out = chainsaw(&["simulate", "--n", "2", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "slot 1: skip 0\nslot 2: eliminate 1 (ordinal 1)\nfinished: survivor 0\n"
    );
}

#[test]
fn card_trick_headline_is_exact() {
    let out = chainsaw(&["card-trick", "--cards", "52", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "last four in order: 0, 16, 32, 48 (positions 1st, 17th, 33rd, 49th cards as dealt)"
    );
}

#[test]
fn verify_with_mismatches_exits_three_and_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = chainsaw(&[
        "verify",
        "--subject",
        "theorem3-paper",
        "--k-min",
        "4",
        "--k-max",
        "4",
        "--n-min",
        "13",
        "--n-max",
        "13",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("-> wrote"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "subject,k,n,lives,expected,oracle\nTheorem3PaperPrinted,4,13,4,9,10\n");
}

#[test]
fn verify_clean_sweep_exits_zero() {
    let out = chainsaw(&["verify", "--subject", "lemma2", "--k-min", "2", "--k-max", "3", "--n-max", "40", "--lives-max", "9"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("mismatches: 0"));
}

#[test]
fn verify_json_is_machine_readable() {
    let out = chainsaw(&[
        "verify", "--subject", "theorem1", "--k-max", "2", "--n-max", "30", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["subject"], "Theorem1");
    assert_eq!(value["checked"], 60);
    assert_eq!(value["complete"], true);
    assert_eq!(value["mismatches"], serde_json::json!([]));
}

#[test]
fn sweep_constant_survivor_reports_thirteen() {
    let out = chainsaw(&["sweep", "--subject", "constant-survivor", "--k", "4", "--n-max", "30", "--lives-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n=13 survivor=10"));
}

#[test]
fn sweep_short_circle_rows_are_tabulated() {
    let out = chainsaw(&["sweep", "--subject", "k-greater-than-n", "--k-max", "6", "--n-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n=3 k=4 survivor=2"));
}

#[test]
fn sweep_noncoprime_with_coprime_filter_is_empty() {
    let out = chainsaw(&[
        "sweep", "--subject", "noncoprime-survey", "--k-max", "3", "--n-max", "20", "--lives-max", "2",
        "--coprime-only",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(no rows)\n");
}

#[test]
fn resource_cap_exits_four() {
    let out = chainsaw(&[
        "sweep", "--subject", "constant-survivor", "--k", "4", "--n-max", "2000", "--lives-max", "8",
        "--slot-cap", "1000",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("over the cap"));
}

#[test]
fn one_life_absent_case_is_reported() {
    let out = chainsaw(&["one-life", "--n", "5", "--k", "3", "--lives", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("formula set: absent"));
    assert!(text.contains("oracle circle: absent"));
    assert!(text.contains("matches: true"));
}

#[test]
fn bench_times_all_three_rings() {
    let out = chainsaw(&["bench", "--n", "500", "--k", "3", "--lives", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("dense:"));
    assert!(text.contains("linked:"));
    assert!(text.contains("indexed:"));
    assert!(text.contains("survivor:"));
}

#[test]
fn json_and_text_carry_the_same_survivor() {
    let text = chainsaw(&["survivor", "--n", "13", "--k", "4", "--lives", "4"]);
    let json = chainsaw(&["survivor", "--n", "13", "--k", "4", "--lives", "4", "--format", "json"]);
    let label: u64 = stdout(&text).trim().parse().unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["survivor"], label);
    assert_eq!(label, 10);
}

#[test]
fn out_path_in_a_missing_directory_fails_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no-such-dir").join("x.json");
    let out = chainsaw(&["survivor", "--n", "5", "--k", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cannot write"));
    assert!(!Path::new(&path).exists());
}
