use std::path::PathBuf;
use std::process::{Command, Output};

use umbral_gauss_cli::validate::ValidationReport;

fn umbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

/// Value column of a one-row `eval` CSV.
fn eval_value(args: &[&str]) -> f64 {
    let o = umbral(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    row.split(',').nth(2).unwrap().parse().unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

#[test]
fn eval_examples() {
    assert!((eval_value(&["eval", "cg", "1.0"]) - 0.367_879_441_171_442_3).abs() < 1e-16);
    assert!((eval_value(&["eval", "quasi_gauss", "1.0", "n=1"]) - 0.5).abs() < 1e-14);
    let levy = eval_value(&["eval", "levy", "1.0", "alpha=0.5"]);
    assert!((levy - 0.219_695_644_733_861_2).abs() < 1e-9);
    assert!((eval_value(&["eval", "sg", "-1"]) + eval_value(&["eval", "sg", "1"])).abs() == 0.0);
}

#[test]
fn eval_reports_work_done() {
    let o = umbral(&["eval", "hyp1f1", "2", "a=0.5", "c=1.5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["terms_used"].as_u64().unwrap() > 0);
    assert!(v["err_estimate"].as_f64().unwrap() < 1e-10);
    let o = umbral(&["eval", "z", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["imag"].is_number());
}

#[test]
fn exit_codes() {
    assert_eq!(umbral(&["eval", "nope", "1"]).status.code(), Some(2));
    assert_eq!(umbral(&["eval", "quasi_gauss", "1"]).status.code(), Some(2));
    assert_eq!(umbral(&["eval", "cg", "1", "k=2"]).status.code(), Some(2));
    assert_eq!(umbral(&["eval", "cg", "one"]).status.code(), Some(2));
    assert_eq!(umbral(&["validate", "nothing"]).status.code(), Some(2));
    assert_eq!(umbral(&["table", "sg", "1", "0", "5"]).status.code(), Some(2));
    // Γ has a pole at 0
    assert_eq!(umbral(&["eval", "gamma", "0"]).status.code(), Some(3));
    assert_eq!(umbral(&["eval", "--list"]).status.code(), Some(0));
}

#[test]
fn sg_table_is_odd_and_deterministic() {
    let a = umbral(&["table", "sg", "-4", "4", "11"]);
    let b = umbral(&["table", "sg", "-4", "4", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().next(), Some("x,sg"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[5], vec![0.0, 0.0]);
    for i in 0..11 {
        assert_eq!(rows[i][1], -rows[10 - i][1]);
    }
}

#[test]
fn fig1_traces_the_symmetric_egg() {
    let path = scratch("fig1.csv");
    let o = umbral(&["table", "fig1", "-4", "4", "801", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("x,cg,sg"));
    let rows = csv_rows(&text);
    assert_eq!(rows.len(), 801);
    // the curve is mirrored in the cg axis and passes through (1, 0)
    for i in 0..801 {
        assert_eq!(rows[i][1], rows[800 - i][1]);
        assert_eq!(rows[i][2], -rows[800 - i][2]);
    }
    assert_eq!(&rows[400][1..], &[1.0, 0.0]);
}

#[test]
fn fig3_columns_are_normalized() {
    let o = umbral(&["table", "fig3", "-3", "3", "601", "n=1..4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("x,sg_d1,sg_d2,sg_d3,sg_d4"));
    let rows = csv_rows(&text);
    for j in 1..=4 {
        let peak = rows.iter().map(|r| r[j].abs()).fold(0.0, f64::max);
        assert_eq!(peak, 1.0);
    }
}

#[test]
fn moments_flag_divergence() {
    let o = umbral(&["moments", "n=2", "m_max=5"]);
    assert!(o.status.success());
    let rows = csv_rows(&stdout(&o));
    let finite: Vec<f64> = rows.iter().map(|r| r[3]).collect();
    assert_eq!(finite, vec![1.0, 1.0, 1.0, 1.0, 0.0, 0.0]);
    assert_eq!(rows[0][1], 1.0);
    assert!(rows[5][1].is_infinite());
}

fn report(args: &[&str], file: &str) -> (Option<i32>, ValidationReport, String) {
    let path = scratch(file);
    let mut all = args.to_vec();
    all.extend(["--out", path.to_str().unwrap()]);
    let o = umbral(&all);
    let json = std::fs::read_to_string(&path).unwrap();
    let r = ValidationReport::from_json(&json).unwrap();
    (o.status.code(), r, json)
}

fn find<'a>(r: &'a ValidationReport, name: &str) -> &'a umbral_gauss_cli::validate::Check {
    r.checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn validate_quasi_gauss() {
    let (code, r, json) = report(&["validate", "quasi-gauss"], "quasi.json");
    assert_eq!(code, Some(0));
    assert!(find(&r, "I_e(1)=π").pass);
    assert_eq!(r.to_json().trim(), json.trim());
}

#[test]
fn validate_levy() {
    let (code, r, _) = report(&["validate", "levy"], "levy.json");
    assert_eq!(code, Some(0));
    let c = find(&r, "laplace(1,0.5)=e^{−1}");
    assert!(c.pass && c.abs_err.unwrap() <= 1e-5);
}

#[test]
fn validate_all_with_unattainable_tolerance_fails_cleanly() {
    let (code, r, _) = report(&["validate", "all", "--rel-tol", "1e-20"], "tight.json");
    assert_eq!(code, Some(1));
    assert!(r.summary.failed > 0);
    assert_eq!(r.summary.total, r.checks.len());
    assert_eq!(r.tolerance_cap, Some(1e-20));
    assert!(r.checks.iter().all(|c| c.tolerance <= 1e-20));
    let mut names: Vec<_> = r.checks.iter().map(|c| c.name.as_str()).collect();
    let before = names.clone();
    names.sort();
    assert_eq!(names, before);
}
