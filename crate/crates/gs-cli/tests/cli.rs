//! End-to-end tests of the `gstower` binary: documented outputs, the
//! committed golden file, closed/oracle byte-identity, the exit-code
//! contract, and the budget environment override.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn gstower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gstower"))
        .args(args)
        .env_remove("SEMIGROUP_BUDGET")
        .output()
        .expect("binary runs")
}

fn gstower_with_budget(budget: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gstower"))
        .args(args)
        .env("SEMIGROUP_BUDGET", budget)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("utf-8 stderr")
}

#[test]
fn table_prints_the_documented_level_four_prefix() {
    let out = gstower(&["table", "--q", "2", "--m", "4", "--rows", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "i,lambda,nu,delta\n0,0,1,2\n1,8,2,2\n2,10,2,2\n");
    assert_eq!(stderr_of(&out), "");
}

#[test]
fn table_prints_the_level_one_prefix() {
    let out = gstower(&["table", "--q", "2", "--m", "1", "--rows", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "i,lambda,nu,delta\n0,0,1,2\n1,1,2,3\n");
}

#[test]
fn table_matches_the_committed_golden_file_from_both_sources() {
    let golden_path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden/table_q2_m4_rows16.csv");
    let golden = fs::read_to_string(golden_path).expect("golden file committed");

    let closed = gstower(&["table", "--q", "2", "--m", "4", "--rows", "16", "--format", "csv"]);
    assert_eq!(closed.status.code(), Some(0));
    assert_eq!(stdout_of(&closed), golden);

    let oracle = gstower(&[
        "table", "--q", "2", "--m", "4", "--rows", "16", "--format", "csv", "--source", "oracle",
    ]);
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(stdout_of(&oracle), golden);
}

#[test]
fn closed_and_oracle_sources_are_byte_identical() {
    let cases: &[(&str, &str, &str)] = &[
        ("2", "6", "80"),
        ("3", "3", "40"),
        ("4", "2", "25"),
        ("5", "2", "30"),
    ];
    for &(q, m, rows) in cases {
        for format in ["csv", "tsv", "json"] {
            let base = ["table", "--q", q, "--m", m, "--rows", rows, "--format", format];
            let closed = gstower(&base);
            let mut oracle_args = base.to_vec();
            oracle_args.extend(["--source", "oracle"]);
            let oracle = gstower(&oracle_args);
            assert_eq!(closed.status.code(), Some(0), "q={q} m={m} {format}");
            assert_eq!(oracle.status.code(), Some(0), "q={q} m={m} {format}");
            assert_eq!(
                closed.stdout, oracle.stdout,
                "sources diverge at q={q} m={m} rows={rows} format={format}"
            );
        }
    }
}

#[test]
fn table_honors_column_selection_and_tsv() {
    let out = gstower(&[
        "table", "--q", "2", "--m", "4", "--rows", "2", "--columns", "delta,i", "--format", "tsv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "delta\ti\n2\t0\n2\t1\n");
}

#[test]
fn table_emits_json_with_keys_in_column_order() {
    let out = gstower(&["table", "--q", "2", "--m", "4", "--rows", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "[{\"i\":0,\"lambda\":0,\"nu\":1,\"delta\":2},{\"i\":1,\"lambda\":8,\"nu\":2,\"delta\":2}]\n"
    );
    let parsed: serde_json::Value =
        serde_json::from_str(stdout_of(&out)).expect("valid JSON");
    assert_eq!(parsed[1]["lambda"], 8);
}

#[test]
fn unrepresentable_level_exits_three_with_a_diagnostic() {
    let out = gstower(&["table", "--q", "2", "--m", "99"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("overflow"), "{}", stderr_of(&out));
    assert_eq!(stdout_of(&out), "");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "--q", "2", "--m", "4", "--rows", "0"][..],
        &["table", "--q", "1", "--m", "4"][..],
        &["table", "--q", "2", "--m", "0"][..],
        &["table", "--q", "2", "--m", "4", "--columns", "i,bogus"][..],
        &["table", "--q", "2", "--m", "4", "--columns", "i,i"][..],
        &["table", "--q", "2", "--m", "4", "--format", "xml"][..],
        &["verify", "--q", "2", "--m-max", "0"][..],
        &["verify", "--m-max", "3"][..],
        &["bounds", "--q", "2", "--m", "4"][..],
    ] {
        let out = gstower(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn bounds_prints_the_documented_values() {
    for (i, expected) in [("6", "delta=2\n"), ("14", "delta=7\n"), ("0", "delta=2\n")] {
        let out = gstower(&["bounds", "--q", "2", "--m", "4", "--i", i]);
        assert_eq!(out.status.code(), Some(0), "i={i}");
        assert_eq!(stdout_of(&out), expected, "i={i}");
    }
}

#[test]
fn verify_small_grid_passes() {
    let out = gstower(&["verify", "--q", "2,3", "--m-max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("all checks passed"));
    assert!(stdout_of(&out).contains("verified 12 levels"));
}

#[test]
fn verify_writes_a_structured_report() {
    let path = std::env::temp_dir().join(format!("gstower-report-{}.json", std::process::id()));
    let out = gstower(&[
        "verify",
        "--q",
        "2",
        "--m-max",
        "4",
        "--report",
        path.to_str().expect("utf-8 temp path"),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));

    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).expect("report written"))
            .expect("valid JSON report");
    fs::remove_file(&path).ok();

    assert_eq!(report["grid"].as_array().expect("grid array").len(), 4);
    let levels = report["checks"].as_array().expect("levels array");
    assert_eq!(levels.len(), 4);
    for level in levels {
        assert_eq!(level["checks"].as_array().expect("check array").len(), 9);
    }
    assert!(report["elapsed_ms"].is_u64());
    assert!(report.get("first_mismatch").is_none());
}

#[test]
fn malformed_budget_is_a_usage_error() {
    let out = gstower_with_budget("not-a-number", &["bounds", "--q", "2", "--m", "4", "--i", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("SEMIGROUP_BUDGET"));
}

#[test]
fn budget_override_limits_the_oracle() {
    // Level 10 over base 2 has conductor 992: the oracle refuses it under
    // a budget of 100, while the closed source needs no materialization.
    let out = gstower_with_budget(
        "100",
        &["table", "--q", "2", "--m", "10", "--rows", "2", "--source", "oracle"],
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("budget"), "{}", stderr_of(&out));

    let closed = gstower_with_budget("100", &["table", "--q", "2", "--m", "10", "--rows", "2"]);
    assert_eq!(closed.status.code(), Some(0));

    // verify silently narrows its grid to levels within the budget.
    let verify = gstower_with_budget("100", &["verify", "--q", "2", "--m-max", "10"]);
    assert_eq!(verify.status.code(), Some(0), "{}", stderr_of(&verify));
    assert!(stdout_of(&verify).contains("verified 6 levels"));
}
