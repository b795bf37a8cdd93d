use std::process::{Command, Output};

use serde_json::Value;

fn qfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn qfib_with_workers(args: &[&str], workers: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfib"))
        .args(args)
        .env("QFIB_WORKERS", workers)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_string).collect()
}

#[test]
fn gen_golden_terms() {
    let out = qfib(&["gen", "--family", "qfib", "--n", "0..5"]);
    assert!(out.status.success());
    let l = lines(&out);
    assert_eq!(l.len(), 6);
    assert_eq!(l[5], "x^4 + q*s*x^2 + q^2*s*x^2 + q^3*s*x^2 + q^4*s^2");

    let out = qfib(&["gen", "--family", "classical", "--n", "0..5"]);
    assert_eq!(
        lines(&out),
        [
            "0",
            "1",
            "x",
            "x^2 + s",
            "x^3 + 2*s*x",
            "x^4 + 3*s*x^2 + s^2"
        ]
    );
}

#[test]
fn gen_negative_indices() {
    let out = qfib(&["gen", "--family", "qfib", "--n", "-3..-1"]);
    assert!(out.status.success());
    let l = lines(&out);
    assert_eq!(l.len(), 3);
    assert_eq!(l[2], "q*s^-1");
    assert!(l.iter().all(|t| t.contains("s^-")));
}

#[test]
fn gen_other_families() {
    let out = qfib(&["gen", "--family", "qbinomial", "--n", "2", "--k", "1"]);
    assert_eq!(lines(&out), ["1 + q"]);
    let out = qfib(&["gen", "--family", "fibonomial", "--n", "3"]);
    assert_eq!(lines(&out), ["1", "x^2 + s", "x^2 + s", "1"]);
    let out = qfib(&["gen", "--family", "fac", "--n", "3"]);
    assert_eq!(lines(&out), ["x^3 + q*s*x"]);
    let out = qfib(&["gen", "--family", "qfibonomial", "--n", "2", "--k", "1"]);
    assert_eq!(lines(&out), ["x"]);
}

#[test]
fn det_examples() {
    assert_eq!(
        lines(&qfib(&[
            "det", "--n", "2", "--m", "1", "--ell", "1", "--k", "1", "--dim", "2"
        ])),
        ["-q*s"]
    );
    assert_eq!(
        lines(&qfib(&[
            "det", "--n", "4", "--k", "1", "--m", "1", "--ell", "1", "--dim", "3"
        ])),
        ["0"]
    );
    assert_eq!(
        lines(&qfib(&[
            "det", "--n", "0", "--m", "1", "--ell", "1", "--k", "1", "--dim", "1"
        ])),
        ["0"]
    );
    let bad = qfib(&["det", "--n", "0", "--k", "1", "--dim", "0"]);
    assert!(!bad.status.success());
}

#[test]
fn table_examples() {
    let out = qfib(&["table", "--kind", "fibonomial", "--rows", "4"]);
    assert_eq!(lines(&out)[3], "1, x^2 + s, x^2 + s, 1");
    assert_eq!(
        lines(&qfib(&["table", "--kind", "qbinomial", "--rows", "1"])),
        ["1"]
    );
    assert_eq!(
        lines(&qfib(&["table", "--kind", "qbinomial", "--rows", "3"]))[2],
        "1, 1 + q, 1"
    );
    assert!(!qfib(&["table", "--kind", "qbinomial", "--rows", "0"])
        .status
        .success());
}

#[test]
fn verify_json_schema_and_exit_code() {
    let out = qfib(&[
        "verify",
        "--identity",
        "theorem1",
        "--k",
        "1..3",
        "--n",
        "-3..8",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 36);
    for r in reports {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 5);
        for key in ["identity", "params", "status", "residual", "elapsed_ms"] {
            assert!(keys.contains(&key), "{key}");
        }
        assert_eq!(r["status"], "zero");
        assert_eq!(r["residual"], "0");
        assert!(r["elapsed_ms"].is_u64());
        assert!(r["params"]["k"].is_i64() && r["params"]["n"].is_i64());
    }
    assert_eq!(v["summary"]["zero"], 36);
}

#[test]
fn verify_single_point_text() {
    let out = qfib(&[
        "verify",
        "--identity",
        "lemma1",
        "--n",
        "2",
        "--m",
        "1",
        "--ell",
        "1",
    ]);
    assert!(out.status.success());
    assert_eq!(lines(&out)[0], "lemma1 n=2 m=1 ell=1: zero 0");
}

#[test]
fn verify_reports_monomial_residual_and_fails() {
    let out = qfib(&[
        "verify",
        "--identity",
        "theorem2",
        "--k",
        "2",
        "--n",
        "0..2",
        "--m",
        "1",
        "--ell",
        "1,2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for r in v["reports"].as_array().unwrap() {
        let expected = if r["params"]["ell"] == 1 { "0" } else { "q^-6" };
        assert_eq!(r["residual"], expected);
    }
    let out = qfib(&[
        "verify",
        "--identity",
        "theorem2",
        "--k",
        "2",
        "--n",
        "0..2",
        "--m",
        "1",
        "--ell",
        "1,2",
        "--closed-form",
        "derived",
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_errors_are_reported_not_crashes() {
    let out = qfib(&[
        "verify",
        "--identity",
        "minor_ratio",
        "--k",
        "1",
        "--j",
        "3",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reports"][0]["status"], "error");
    assert_eq!(v["summary"]["error"], 1);
}

#[test]
fn verify_rejects_unused_parameters_and_bad_ranges() {
    let out = qfib(&["verify", "--identity", "lemma1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qfib(&["verify", "--identity", "lemma1", "--n", "3..1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qfib(&["verify", "--identity", "nonsense"]);
    assert!(!out.status.success());
}

#[test]
fn verify_accepts_aliases_and_default_grid() {
    let out = qfib(&["verify", "--identity", "qbinomial_1_9"]);
    assert!(out.status.success());
    assert_eq!(
        lines(&out).last().unwrap(),
        "13 points: 13 zero, 0 residual, 0 error"
    );
    assert!(qfib(&[
        "verify",
        "--identity",
        "eq_2_26",
        "--k",
        "1",
        "--n",
        "-1..2"
    ])
    .status
    .success());
}

#[test]
fn output_is_deterministic_and_independent_of_workers() {
    let args = [
        "verify",
        "--identity",
        "vanishing",
        "--k",
        "1..2",
        "--n",
        "-2..5",
        "--format",
        "json",
        "--no-timings",
    ];
    let a = qfib(&args);
    let b = qfib(&args);
    let c = qfib_with_workers(&args, "4");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let text = ["verify", "--identity", "corollary2"];
    assert_eq!(qfib(&text).stdout, qfib_with_workers(&text, "3").stdout);
    assert_eq!(qfib_with_workers(&text, "zero").status.code(), Some(2));
}
