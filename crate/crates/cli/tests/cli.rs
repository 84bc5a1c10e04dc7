//! End-to-end tests of the `delannoy` binary: exit codes, record formats,
//! and byte-determinism across thread counts.

use std::process::{Command, Output};

fn delannoy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delannoy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout).lines().map(str::to_string).collect()
}

#[test]
fn empty_prime_range_exits_zero_with_no_records() {
    let out = delannoy(&["verify", "--statements", "MAIN1", "--pmin", "24", "--pmax", "28"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("checked=0"));
}

#[test]
fn passing_campaign_exits_zero() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "MAIN1,MAIN2",
        "--pmin",
        "3",
        "--pmax",
        "97",
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // 24 primes in [3, 97], two statements each
    assert_eq!(stdout_lines(&out).len(), 48);
}

#[test]
fn main3_literal_counterexamples_exit_one() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "MAIN3_LITERAL",
        "--pmin",
        "3",
        "--pmax",
        "11",
        "--format",
        "human",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    let failed: Vec<_> = lines.iter().filter(|l| l.contains("FAIL")).collect();
    assert_eq!(failed.len(), 3);
    assert!(failed[0].starts_with("MAIN3_LITERAL p=3 FAIL"));
    assert!(failed[1].starts_with("MAIN3_LITERAL p=7 FAIL"));
    assert!(failed[2].starts_with("MAIN3_LITERAL p=11 FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    let out = delannoy(&["verify", "--statements", "MAIN9", "--pmin", "3", "--pmax", "11"]);
    assert_eq!(out.status.code(), Some(2));
    let out = delannoy(&["verify", "--statements", "MAIN1", "--pmin", "11", "--pmax", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = delannoy(&["verify", "--statements", "MAIN1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = delannoy(&["two-squares", "--p", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = delannoy(&["two-squares", "--p", "21"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jsonl_record_schema_is_pinned() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "MAIN1",
        "--pmin",
        "5",
        "--pmax",
        "5",
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_lines(&out),
        vec![r#"{"statement":"MAIN1","p":5,"e":1,"lhs":3,"rhs":3,"ok":true,"note":""}"#]
    );
}

#[test]
fn csv_header_and_row() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "MAIN1",
        "--pmin",
        "5",
        "--pmax",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(
        stdout_lines(&out),
        vec!["statement,p,e,lhs,rhs,ok,note", "MAIN1,5,1,3,3,true,"]
    );
}

#[test]
fn x_arguments_flow_into_parametrized_statements() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "SUN_ALTERNATING",
        "--pmin",
        "5",
        "--pmax",
        "5",
        "--x",
        "-1/4,2",
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains(r#""note":"x = -1/4; <x>_p = 1""#));
    assert!(lines[0].contains(r#""lhs":24"#));
    assert!(lines[1].contains("x = 2"));
}

#[test]
fn output_file_is_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut contents = Vec::new();
    for threads in ["1", "4", "8"] {
        let path = dir.path().join(format!("records-{threads}.jsonl"));
        let out = delannoy(&[
            "verify",
            "--statements",
            "MAIN1,DSQUARE_X,CONJ_ZERO_MODP2",
            "--pmin",
            "3",
            "--pmax",
            "200",
            "--threads",
            threads,
            "--format",
            "jsonl",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        contents.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(contents[0], contents[1]);
    assert_eq!(contents[0], contents[2]);
}

#[test]
fn records_are_sorted_by_prime_then_statement() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "CENTRAL_REDUCTION,MAIN1", // selection order is not emission order
        "--pmin",
        "3",
        "--pmax",
        "20",
        "--format",
        "csv",
    ]);
    let lines = stdout_lines(&out);
    let mut keys = Vec::new();
    for line in &lines[1..] {
        let mut fields = line.split(',');
        let stmt = fields.next().unwrap().to_string();
        let p: u32 = fields.next().unwrap().parse().unwrap();
        let rank = if stmt == "MAIN1" { 0 } else { 1 };
        keys.push((p, rank));
    }
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn two_squares_prints_x_y() {
    let out = delannoy(&["two-squares", "--p", "13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_lines(&out), vec!["-3 2"]);
    let out = delannoy(&["two-squares", "--p", "5"]);
    assert_eq!(stdout_lines(&out), vec!["1 2"]);
}

#[test]
fn identities_subcommand_passes_at_small_bounds() {
    let out = delannoy(&["identities", "--nmax", "6", "--jmax", "10", "--mmax", "15"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("squared d_n identity, n <= 6: ok"));
    assert!(!text.contains("FAILED"));
}

#[test]
fn fail_fast_still_flushes_records() {
    let out = delannoy(&[
        "verify",
        "--statements",
        "MAIN3_LITERAL",
        "--pmin",
        "3",
        "--pmax",
        "30",
        "--fail-fast",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // the failing block is fully flushed: all 9 odd primes up to 29
    assert_eq!(stdout_lines(&out).len(), 1 + 9);
}
