//! End-to-end tests of the `gibsum` binary: subcommand behavior, exit
//! codes, and the report wire formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gibsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gibsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn eval_fixture_point_passes() {
    let out = gibsum(&[
        "eval",
        "--family",
        "five_product",
        "--a",
        "0",
        "--b",
        "1",
        "--n",
        "1",
        "--t",
        "2",
        "--m",
        "-2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("closed form: 30"));
    assert!(text.contains("oracle:      30"));
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn eval_zero_denominator_is_domain_error() {
    let out = gibsum(&[
        "eval",
        "--family",
        "reciprocal",
        "--a",
        "0",
        "--b",
        "1",
        "--n",
        "2",
        "--t",
        "-1",
        "--m",
        "0",
    ]);
    assert_eq!(exit_code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("G_0"),
        "error names the vanishing index: {err}"
    );
}

#[test]
fn eval_negative_n_is_usage_error() {
    let out = gibsum(&[
        "eval", "--family", "fifth", "--a", "0", "--b", "1", "--n", "-4",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unknown_flags_are_usage_errors() {
    assert_eq!(exit_code(&gibsum(&["eval", "--no-such-flag"])), 2);
    assert_eq!(exit_code(&gibsum(&["verify", "--family", "nonsense"])), 2);
    assert_eq!(exit_code(&gibsum(&["verify", "--grid", "q=0..2"])), 2);
    assert_eq!(exit_code(&gibsum(&["--help"])), 0);
}

#[test]
fn list_prints_catalogs() {
    let out = gibsum(&["list"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for needle in [
        "gelin_cesaro",
        "five_product_weighted",
        "fib-five-product",
        "lucas-fifth-alt",
        "suspected erratum",
        "fib-limit-3j",
    ] {
        assert!(text.contains(needle), "list output missing {needle}");
    }
}

#[test]
fn verify_writes_json_report_that_round_trips() {
    let path = report_path("cli_report.json");
    let out = gibsum(&[
        "verify",
        "--family",
        "reciprocal",
        "--grid",
        "n=0..6,t=-3..3,m=-3..3",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("PASS"));

    let body = std::fs::read_to_string(&path).unwrap();
    let docs: serde_json::Value = serde_json::from_str(&body).unwrap();
    let report = &docs.as_array().unwrap()[0];
    assert_eq!(report["family"], "reciprocal");
    assert!(report["cells_skipped_zero"].as_u64().unwrap() > 0);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert!(report["grid"].as_str().unwrap().contains("n=0..6"));
}

#[test]
fn verify_markdown_report_matches_json_numbers() {
    let json_path = report_path("cli_report_md.json");
    let md_path = report_path("cli_report.md");
    let grid = "n=0..5,t=-2..2,m=-2..2";
    let out = gibsum(&[
        "verify",
        "--family",
        "r_reciprocal",
        "--grid",
        grid,
        "--report",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let out = gibsum(&[
        "verify",
        "--family",
        "r_reciprocal",
        "--grid",
        grid,
        "--format",
        "markdown",
        "--report",
        md_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let md = std::fs::read_to_string(&md_path).unwrap();
    let report = &json.as_array().unwrap()[0];
    for key in ["cells_checked", "cells_skipped_zero"] {
        let value = report[key].as_u64().unwrap().to_string();
        assert!(md.contains(&value), "markdown missing {key}={value}");
    }
    assert!(md.contains(report["grid"].as_str().unwrap()));
}

#[test]
fn fixtures_exit_one_on_printed_errata_by_default() {
    let out = gibsum(&["fixtures"]);
    assert_eq!(exit_code(&out), 1, "as-printed erratum counts as a failure");
    assert!(stdout(&out).contains("ERRATUM CONFIRMED"));
    assert!(stdout(&out).contains("fails first at n=1"));

    let out = gibsum(&["fixtures", "--expect-errata"]);
    assert_eq!(exit_code(&out), 0);

    let out = gibsum(&["fixtures", "--id", "fib-weighted-2j"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("PASS"));

    let out = gibsum(&["fixtures", "--id", "no-such"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn limit_certifies_and_reports() {
    let out = gibsum(&["limit", "--a", "2", "--b", "1", "--t", "2", "--m", "-1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("1/4620"));
    assert!(text.contains("certified"));

    // remainder grows: not converged
    let out = gibsum(&["limit", "--a", "0", "--b", "1", "--t", "2", "--m", "12"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("NOT CONVERGED"));

    // window crosses F_0: domain error
    let out = gibsum(&["limit", "--a", "0", "--b", "1", "--t", "1", "--m", "-1"]);
    assert_eq!(exit_code(&out), 3);

    // junk tolerance: usage error
    let out = gibsum(&[
        "limit", "--a", "0", "--b", "1", "--t", "2", "--m", "-1", "--tol", "x",
    ]);
    assert_eq!(exit_code(&out), 2);

    // limits only exist for the reciprocal family
    let out = gibsum(&[
        "limit", "--family", "fifth", "--a", "0", "--b", "1", "--t", "2", "--m", "-1",
    ]);
    assert_eq!(exit_code(&out), 2);
}

fn report_path(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}
