// SPDX-License-Identifier: Apache-2.0
use std::process::{Command, Output};

use serde_json::Value;

fn boxplus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxplus")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn error_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).unwrap()
}

#[test]
fn nary_example() {
    let o = boxplus(&["eval", "--nary", "-3,-2,3,3,1,-3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-2");
    let o = boxplus(&["eval", "--residual", "-3,-2,3,3,1,-3"]);
    assert!(stdout(&o).contains('2') && stdout(&o).contains('5'));
}

#[test]
fn parallel_lines() {
    let o = boxplus(&["line", "parallel", "--a", "3,1", "--b", "1,-2", "--c", "-2,4", "--d", "-6,1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("parallel: true"));
    assert!(s.contains("c: -6") && s.contains("d: 12") && s.contains("alpha: 1/2"));
}

#[test]
fn determinant_json() {
    let o = boxplus(&["--format", "json", "det", "--matrix", "3,1;1,-2"]);
    assert_eq!(json(&o)["det"], "-6");
}

#[test]
fn formats() {
    let o = boxplus(&["--format", "json", "dist", "--x", "1,2", "--y", "3,-4"]);
    let v = json(&o);
    assert_eq!((v["dist"].as_str(), v["inner"].as_str()), (Some("4"), Some("-8")));
    let o = boxplus(&["--format", "csv", "dist", "--x", "1,2", "--y", "3,-4"]);
    assert_eq!(stdout(&o), "dist,inner,norm_x,norm_y\n4,-8,2,4\n");
    let o = boxplus(&["--decimals", "3", "trig", "pcos", "--theta", "3/2"]);
    assert_eq!(stdout(&o).trim(), "0.500");
}

#[test]
fn parse_errors_exit_2() {
    let o = boxplus(&["eval", "--boxplus", "1/0"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "parse_error");
    let o = boxplus(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_json(&o)["error"], "usage");
}

#[test]
fn domain_errors_exit_1() {
    let o = boxplus(&["ball", "--center", "1,2", "--alpha", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    let e = error_json(&o);
    assert_eq!(e["error"], "negative_radius");
    assert!(e["detail"].as_str().is_some());
    assert!(o.stdout.is_empty());
}

#[test]
fn oracle_report() {
    let o = boxplus(&["oracle", "--op", "sum", "--x", "-3,-2,3,3,1,-3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["p"].as_array().unwrap().len(), v["error"].as_array().unwrap().len());
    assert_eq!(v["converged"], true);
    assert_eq!(v["limit"], "-2");
    let o = boxplus(&["--p-grid", "1,2", "oracle", "--op", "sum", "--x", "-3,-2,3,3,1,-3"]);
    assert_eq!(json(&o)["converged"], false);
}

#[test]
fn svg_is_deterministic() {
    let a = boxplus(&["plot", "unit-square"]);
    let b = boxplus(&["plot", "unit-square"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.starts_with("<svg") && s.contains(r#"width="800" height="800""#));
    let h = boxplus(&["plot", "hull", "--pair", "3,1;1,-2", "--pair", "-1,2;2,2"]);
    assert!(stdout(&h).contains("<circle"));
}

#[test]
fn file_and_out() {
    let dir = std::env::temp_dir().join(format!("boxplus-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.json");
    std::fs::write(&input, r#"{"x": "1,2", "y": "3,-4"}"#).unwrap();
    let out = dir.join("out.json");
    let o = boxplus(&[
        "--file", input.to_str().unwrap(), "--out", out.to_str().unwrap(), "--format", "json", "dist",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["dist"], "4");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn passing_suite() {
    let o = boxplus(&["--samples", "40", "suite", "scalar"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v[0]["suite"], "scalar");
    assert_eq!(v[0]["failed"], 0);
    let o = boxplus(&["suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}
