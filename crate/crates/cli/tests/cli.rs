//! End-to-end tests of the `motzkin` binary: argument handling, output
//! modes and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_motzkin"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn validate_reports_member_coordinates() {
    let out = run(&["validate", "98"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word: 10122"));
    assert!(text.contains("index: 11"));

    // Same member through the word door.
    let word = run(&["validate", "10122", "--ternary"]);
    assert_eq!(stdout(&word), text);
}

#[test]
fn domain_errors_exit_1_usage_errors_exit_2() {
    let nonmember = run(&["validate", "7"]);
    assert_eq!(nonmember.status.code(), Some(1));
    assert!(stderr(&nonmember).contains("not a member"));

    let invalid = run(&["validate", "1221", "--ternary"]);
    assert_eq!(invalid.status.code(), Some(1));
    assert!(stderr(&invalid).contains("more 1s than 2s"));

    let unknown_flag = run(&["validate", "98", "--bogus"]);
    assert_eq!(unknown_flag.status.code(), Some(2));

    let not_a_number = run(&["decode", "ten"]);
    assert_eq!(not_a_number.status.code(), Some(2));

    let missing_scan_kind = run(&["special", "--scan", "--max-n", "30"]);
    assert_eq!(missing_scan_kind.status.code(), Some(2));
}

#[test]
fn succ_trace_line_format() {
    let out = run(&["succ", "1001220", "--ternary", "--trace"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with(
        "58. 100\u{b7}(1220)\u{2032} = 1002000, type of suffix 1\u{2022}0, \
         length = 4, balance = -1, k = 2, l = 0\n"
    ));
    assert!(text.contains("succ_value: 783"));
}

#[test]
fn machine_and_json_modes() {
    let tsv = run(&["rank", "23960", "--machine"]);
    assert_eq!(stdout(&tsv), "word\t1012212102\nvalue\t23960\nindex\t1218\n");

    let json = run(&["unrank", "1219", "--json"]);
    assert_eq!(
        stdout(&json),
        "{\"index\":\"1219\",\"word\":\"1012212120\",\"value\":\"23964\"}\n"
    );

    let conflict = run(&["rank", "5", "--machine", "--json"]);
    assert_eq!(conflict.status.code(), Some(2));
}

#[test]
fn enumerate_streams_in_order() {
    let out = run(&["enumerate", "--count", "5", "--format", "decimal"]);
    assert_eq!(stdout(&out), "0: 0\n1: 5\n2: 11\n3: 15\n4: 29\n");

    let words = run(&["enumerate", "--from", "9", "--count", "3", "--format", "ternary"]);
    assert_eq!(stdout(&words), "9: 10002\n10: 10020\n11: 10122\n");
}

#[test]
fn render_matches_library_output() {
    let ascii = run(&["render", "23960", "--no-legend"]);
    assert_eq!(stdout(&ascii), "  /\\      \n/_  \\/\\/_\\\n");

    let svg = run(&["render", "12", "--ternary", "--format", "svg"]);
    let text = stdout(&svg);
    assert!(text.starts_with("<svg "));
    assert!(text.contains("points=\"0,1 1,0 2,1\""));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("path.svg");
    let to_file = run(&["render", "12", "--ternary", "--format", "svg", "--out"])
        .status
        .code();
    assert_eq!(to_file, Some(2), "--out needs a value");
    let ok = bin()
        .args(["render", "12", "--ternary", "--format", "svg", "--out"])
        .arg(&file)
        .output()
        .unwrap();
    assert!(ok.status.success());
    assert_eq!(std::fs::read_to_string(&file).unwrap(), text);
}

#[test]
fn oeis_check_uses_env_cache_and_reports_skips() {
    let vendored = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/oeis");
    let ok = bin()
        .args(["oeis-check"])
        .env("MOTZKIN_OEIS_CACHE", &vendored)
        .output()
        .unwrap();
    assert!(ok.status.success(), "{}", stderr(&ok));
    assert_eq!(stdout(&ok).matches("status: agree").count(), 4);
    assert!(stdout(&ok).contains("index_shift: 1"), "A052919 offset");

    let empty = tempfile::tempdir().unwrap();
    let skipped = bin()
        .args(["oeis-check"])
        .env("MOTZKIN_OEIS_CACHE", empty.path())
        .output()
        .unwrap();
    assert_eq!(skipped.status.code(), Some(1), "nothing checked");
    assert_eq!(stdout(&skipped).matches("status: skipped").count(), 4);
    assert!(stderr(&skipped).contains("no b-files"));
}

#[test]
fn fixtures_diff_flags_planted_errata() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("listing.txt");
    std::fs::write(&path, "0: 0, 5, 11, 15;\n4: 29, 33, 44/45, 99;\n").unwrap();

    let report = bin()
        .args(["fixtures-diff", "--payload", "values", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(report.status.success(), "reporting alone succeeds");
    let text = stdout(&report);
    assert!(text.contains("printed: 99"));
    assert!(text.contains("recomputed: 50"));
    assert!(text.contains("clean: false"));

    let strict = bin()
        .args(["fixtures-diff", "--fail-on-errata", "--payload", "values", "--file"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn verify_runs_all_suites() {
    let out = run(&["verify", "--max-n", "8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("status: ok").count(), 6);
    assert!(!text.contains("FAIL"));
}

#[test]
fn special_single_value_with_evidence() {
    let composite = run(&["special", "--kind", "e", "--n", "112"]);
    let text = stdout(&composite);
    assert!(text.contains("verdict: composite"));
    assert!(text.contains("evidence: factor 11"));

    let prime = run(&["special", "--kind", "e", "--n", "26"]);
    assert!(stdout(&prime).contains("verdict: prime"));

    let scan = run(&["special", "--kind", "ebar", "--scan", "--max-n", "30"]);
    assert!(stdout(&scan).contains("prime_indices: 0,1,2,4,5,6,9,16,17,30"));

    let mersenne = run(&["special", "--kind", "mersenne", "--scan", "--max-n", "30"]);
    assert!(stdout(&mersenne).contains("prime_indices: 2,3,5,7,13,17,19"));
}
