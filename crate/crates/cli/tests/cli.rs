use std::process::{Command, Output};

use serde_json::Value;

fn sdcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdcalc"))
        .args(args)
        .output()
        .expect("spawn sdcalc")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = sdcalc(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn values(v: &Value) -> Vec<String> {
    v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn numbers_triangular_and_linear() {
    assert_eq!(
        values(&json(&["numbers", "--d", "2", "--n-max", "5"])),
        ["0", "1", "3", "6", "10", "15"]
    );
    assert_eq!(
        values(&json(&["numbers", "--d", "1", "--n-max", "3"])),
        ["0", "1", "2", "3"]
    );
}

#[test]
fn zero_dimension_is_a_usage_error() {
    let o = sdcalc(&["numbers", "--d", "0", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn binomial_rows() {
    assert_eq!(
        values(&json(&["binomials", "--d", "2", "--n", "4"])),
        ["1", "10", "20", "10", "1"]
    );
    assert_eq!(
        values(&json(&["binomials", "--d", "3", "--n", "1"])),
        ["1", "1"]
    );
    assert_eq!(values(&json(&["binomials", "--d", "2", "--n", "0"])), ["1"]);
}

#[test]
fn bernoulli_numbers() {
    assert_eq!(
        values(&json(&["bernoulli", "--d", "3", "--n-max", "4"])),
        ["1", "-1/4", "3/20", "-7/40", "97/280"]
    );
    assert_eq!(
        values(&json(&[
            "bernoulli",
            "--d",
            "2",
            "--m",
            "2",
            "--n-max",
            "2"
        ])),
        ["1", "-1/6", "1/30"]
    );
}

#[test]
fn bernoulli_polynomial_rows_in_csv() {
    let o = sdcalc(&[
        "bernoulli",
        "--d",
        "2",
        "--poly",
        "--n-max",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "d,m,n,coefficients\n2,1,0,1\n2,1,1,\"-1/3,1\"\n"
    );
}

#[test]
fn verify_full_suite_passes() {
    let o = sdcalc(&[
        "verify", "--all", "--d", "1..4", "--n-max", "10", "--format", "csv",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    assert!(out.lines().count() > 100);
    assert!(!out.contains(",false,"));
}

#[test]
fn verify_kummer_touchard() {
    let v = json(&["verify", "--identity", "kummer-touchard", "--d", "1..12"]);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 12);
    assert!(records.iter().all(|r| r["passed"] == true));
    assert_eq!(records[11]["params"]["d"], 12);
}

#[test]
fn strict_audit_fails_with_three_mismatches() {
    let o = sdcalc(&[
        "verify",
        "--audit-tables",
        "--strict-paper",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let bad: Vec<(u64, u64, &str)> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["passed"] == false)
        .map(|r| {
            let p = &r["params"];
            (
                p["d"].as_u64().unwrap(),
                p["n"].as_u64().unwrap(),
                r["value"].as_str().unwrap(),
            )
        })
        .collect();
    assert_eq!(bad, [(2, 2, "1/6"), (4, 4, "179/210"), (5, 4, "65/42")]);
}

#[test]
fn lenient_audit_reports_but_passes() {
    let o = sdcalc(&["verify", "--audit-tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("false").count(), 3);
}

#[test]
fn verify_rejects_bad_ranges() {
    assert_eq!(
        sdcalc(&["verify", "--identity", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sdcalc(&["verify", "--all", "--d", "0..3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sdcalc(&["verify", "--all", "--d", "4..2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sdcalc(&["verify", "--all", "--n-max", "1000"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exp_partial_sums() {
    assert_eq!(
        values(&json(&["exp", "--d", "2", "--x", "1", "--terms", "3"])),
        ["43/18"]
    );
    assert_eq!(
        values(&json(&["exp", "--d", "1", "--x", "0", "--terms", "5"])),
        ["1"]
    );
    let v = json(&[
        "exp",
        "--d",
        "3",
        "--x",
        "1/2",
        "--terms",
        "2",
        "--decimal",
        "4",
    ]);
    assert_eq!(v["records"][0]["value"], "25/16");
    assert_eq!(v["records"][0]["decimal"], "1.5625");
}

#[test]
fn exp_negative_argument_and_truncation() {
    let v = json(&[
        "exp",
        "--d",
        "1",
        "--x",
        "-1",
        "--terms",
        "3",
        "--decimal",
        "3",
    ]);
    // 1 - 1 + 1/2 - 1/6
    assert_eq!(v["records"][0]["value"], "1/3");
    assert_eq!(v["records"][0]["decimal"], "0.333");
}

#[test]
fn exp_rejects_malformed_rational() {
    for x in ["1/0", "abc", "1/-2", ""] {
        assert_eq!(
            sdcalc(&["exp", "--d", "2", "--x", x]).status.code(),
            Some(2),
            "x = {x:?}"
        );
    }
    assert_eq!(
        sdcalc(&["exp", "--d", "2", "--x", "1", "--terms", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    for format in ["table", "csv", "json"] {
        let args = [
            "bernoulli",
            "--d",
            "4",
            "--m",
            "2",
            "--n-max",
            "12",
            "--format",
            format,
        ];
        assert_eq!(sdcalc(&args).stdout, sdcalc(&args).stdout);
    }
}

#[test]
fn json_round_trips_exact_rationals() {
    let v = json(&["bernoulli", "--d", "5", "--n-max", "6"]);
    assert_eq!(v["command"], "bernoulli");
    assert_eq!(v["params"]["d"], 5);
    let table =
        sdcalc_core::bernoulli::bernoulli_numbers_series(sdcalc_core::Dim::new(5).unwrap(), 1, 6)
            .unwrap();
    let parsed: Vec<_> = values(&v)
        .iter()
        .map(|s| sdcalc_core::rational::parse_rational(s).unwrap())
        .collect();
    assert_eq!(parsed, table.values);
}

#[test]
fn help_exits_zero() {
    assert_eq!(sdcalc(&["--help"]).status.code(), Some(0));
    assert_eq!(sdcalc(&[]).status.code(), Some(2));
}
