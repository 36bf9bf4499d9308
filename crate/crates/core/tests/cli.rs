use std::process::{Command, Output};

use ga3::multivector::Multivector;
use ga3::signature::Signature;
use ga3::text::{parse_mv, render};
use proptest::prelude::*;

const A_SECOND: &str = "4,1,3,-5,10,9,-9,-4 / 17";

fn ga3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ga3")).args(args).env_remove("GA_EPS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_sinh_prints_reference_row() {
    let o = ga3(&["eval", "--algebra", "cl30", "--fn", "sinh", "--mv", A_SECOND]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o).trim_end(),
        "0.0806082 - 0.0230640*e1 + 0.0787983*e2 - 0.1724390*e3 + 0.5504206*e12 + 0.4830460*e13 - 0.4666026*e23 - 0.2082492*e123"
    );
}

#[test]
fn compare_tanh_six_terms() {
    let o = ga3(&["compare", "--algebra", "cl30", "--fn", "tanh", "--terms", "6", "--mv", A_SECOND]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("closed: 0.6231177 "), "{text}");
    assert!(lines[1].starts_with("series(6): 0.7629316 "), "{text}");
    let delta: f64 = lines[2].strip_prefix("max delta: ").unwrap().parse().unwrap();
    assert!(delta > 0.13 && delta < 0.18, "{delta}");
    assert!(stderr(&o).contains("warning"), "{}", stderr(&o));
}

#[test]
fn compare_converged_series_is_quiet() {
    let o = ga3(&["compare", "--fn", "cosh", "--terms", "30", "--mv", A_SECOND, "--format", "json"]);
    assert!(o.status.success());
    assert!(stderr(&o).is_empty(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["max_delta"].as_f64().unwrap() < 1e-12);
}

#[test]
fn json_output_schema() {
    let o = ga3(&["eval", "--fn", "exp", "--mv", "0,0,0,0,0,0,0,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["algebra"], "cl30");
    assert_eq!(v["coeffs"], serde_json::json!([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
    assert_eq!(v["basis"], serde_json::json!(["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"]));
}

#[test]
fn determinant_and_norm() {
    let o = ga3(&["eval", "--fn", "det", "--mv", "4 + 1*e1 + 3*e2 - 5*e3 + 10*e12 + 9*e13 - 9*e23 - 4*e123", "--digits", "0"]);
    assert_eq!(stdout(&o).trim(), "71129");
    let o = ga3(&["eval", "--fn", "det-norm", "--mv", "4,1,3,-5,10,9,-9,-4", "--digits", "4"]);
    assert_eq!(stdout(&o).trim(), "16.330");
    let o = ga3(&["eval", "--algebra", "cl21", "--fn", "det-norm", "--mv", "1 + e1 + e23"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("negative determinant"));
}

#[test]
fn trig_needs_series_in_split_algebras() {
    let o = ga3(&["eval", "--algebra", "cl03", "--fn", "sin", "--mv", "0.1*e1"]);
    assert!(!o.status.success());
    assert!(stderr(&o).starts_with("error: "));
    let o = ga3(&["eval", "--algebra", "cl03", "--fn", "sin", "--series", "--terms", "30", "--mv", "0.1*e1", "--digits", "0"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let x = parse_mv(stdout(&o).trim(), Signature::Cl03).unwrap();
    // e1² = -1, so sin(0.1 e1) = sinh(0.1) e1.
    assert!((x.c[1] - 0.1f64.sinh()).abs() < 1e-16);
}

#[test]
fn parse_errors_report_column() {
    let o = ga3(&["eval", "--fn", "exp", "--mv", "1 + 2*e31"]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("column 7") && err.contains("e13"), "{err}");
}

#[test]
fn sqrt_center_and_factors() {
    let o = ga3(&["eval", "--algebra", "cl21", "--fn", "sqrt-center", "--mv", "2 + 0.5*I", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 4);
    let o = ga3(&["eval", "--algebra", "cl03", "--fn", "exp-factors", "--mv", "e1 + e23"]);
    assert!(stdout(&o).contains("branch: PlusDegenerate"), "{}", stdout(&o));
}

#[test]
fn eps_from_environment() {
    let run = |eps: &str| {
        Command::new(env!("CARGO_BIN_EXE_ga3"))
            .args(["eval", "--algebra", "cl03", "--fn", "exp-factors", "--mv", "e1 + 1.00001*e23"])
            .env("GA_EPS", eps)
            .output()
            .unwrap()
    };
    assert!(stdout(&run("1e-12")).contains("branch: Generic"));
    assert!(stdout(&run("1e-6")).contains("branch: PlusDegenerate"));
    assert!(!run("-1").status.success());
}

#[test]
fn spin_sweep_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.csv");
    let p = path.to_str().unwrap();
    let o = ga3(&[
        "spin", "--omega", "1", "--omega1", "0.05", "--b0-start", "-2", "--b0-end", "2", "--T", "500", "--sigma", "-1",
        "--samples", "5000", "--out", p,
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,b0,p_down"));
    let rows: Vec<[f64; 3]> = lines
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|x| x.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect();
    assert_eq!(rows.len(), 5000);
    let peak = rows.iter().max_by(|a, b| a[2].total_cmp(&b[2])).unwrap();
    assert!((peak[1] - 1.0).abs() <= 0.1, "{peak:?}");
}

proptest! {
    #[test]
    fn render_parse_round_trip(c in prop::array::uniform8(prop::num::f64::NORMAL | prop::num::f64::ZERO | prop::num::f64::SUBNORMAL)) {
        let x = Multivector::new(Signature::Cl12, c);
        prop_assert_eq!(parse_mv(&render(&x, None), Signature::Cl12).unwrap(), x);
    }
}
