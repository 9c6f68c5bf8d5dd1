//! End-to-end tests of the binary: worked examples from the engine, output
//! determinism, and the exit-code contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidmodels"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin written");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn nested_counts() {
    let out = run(&["nested", "--n", "4", "--size", "2", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "10");
    let out = run(&["nested", "--n", "4", "--size", "3", "--count"]);
    assert_eq!(stdout(&out).trim(), "15");
    let out = run(&["nested", "--n", "2"]);
    assert_eq!(stdout(&out).trim(), "[[1,2]]");
}

#[test]
fn nested_depth_filter() {
    // depth-1 elements are the maximal-model strata images
    let out = run(&["nested", "--n", "4", "--depth", "1", "--count"]);
    assert_eq!(stdout(&out).trim(), "13");
}

#[test]
fn bijection_paper_instance_roundtrip() {
    let nested = "[[1,2],[3,4],[3,4,5],[1,2,3,4,5]]";
    let out = run_stdin(&["bijection", "--n", "5"], nested);
    assert!(out.status.success());
    let partition = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&partition).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"ground": 8, "blocks": [[1,2],[3,4],[5,7],[6,8]]})
    );
    let out = run_stdin(&["bijection", "--n", "5", "--invert"], &partition);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!([[1,2],[1,2,3,4,5],[3,4],[3,4,5]]));
}

#[test]
fn action_images() {
    let out = run_stdin(
        &["action", "--n", "4", "--sigma", "1 0 2 3 4", "--input", "[[1,2],[1,2,3,4]]"],
        "",
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!([[1,3,4],[1,2,3,4]]));
}

#[test]
fn action_orbit_counts() {
    let out = run(&["action", "--n", "5", "--orbits", "--k", "3", "--mode", "natural", "--count"]);
    assert_eq!(stdout(&out).trim(), "3");
    let out = run(&["action", "--n", "5", "--orbits", "--k", "3", "--mode", "extended", "--count"]);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn closure_reaches_everything() {
    let out = run(&["closure", "--n", "4", "--seed-maximal", "--count"]);
    assert_eq!(stdout(&out).trim(), "26");
}

#[test]
fn poincare_values() {
    let out = run(&["poincare", "--model", "minimal", "--n", "5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let terms = v.get("terms").unwrap().as_array().unwrap();
    let nums: Vec<&str> = terms.iter().map(|t| t["num"].as_str().unwrap()).collect();
    assert_eq!(nums, vec!["1", "16", "16", "1"]);
    let out = run(&["poincare", "--model", "supermaximal", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
}

#[test]
fn series_with_comparison() {
    let out = run(&["series", "--name", "xi", "--order", "4", "--compare"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["series", "--name", "phisuper", "--order", "4", "--compare"]);
    assert!(out.status.success());
    // no oracle wired: usage error
    let out = run(&["series", "--name", "gamma", "--order", "4", "--compare"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let a = run(&["series", "--name", "bigpsi", "--order", "6"]);
    let b = run(&["series", "--name", "bigpsi", "--order", "6"]);
    assert_eq!(stdout(&a), stdout(&b));
    let a = run(&["basis", "--model", "supermaximal", "--n", "4"]);
    let b = run(&["basis", "--model", "supermaximal", "--n", "4"]);
    assert_eq!(stdout(&a), stdout(&b));
    // 22 basis elements for the supermaximal model at n=4
    assert_eq!(stdout(&a).lines().count(), 22);
}

#[test]
fn verify_small_passes() {
    let out = run(&["verify", "--n-max", "3", "--order", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["poincare", "--model", "sideways", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["nested"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_stdin(&["bijection", "--n", "5"], "[[1,1]]");
    assert_eq!(out.status.code(), Some(2));
}
