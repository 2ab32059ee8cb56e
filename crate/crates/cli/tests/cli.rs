use std::process::{Command, Output};

use capelli_core::json::central_from_json;
use capelli_core::spec::ElementSpec;
use capelli_core::ElementCache;

fn capelli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capelli")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = capelli(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn capelli_element_text() {
    assert_eq!(stdout(&["element", "--spec", "H:2@n=2"]), "e[1,1]·e[2,2] - e[2,1]·e[1,2] + e[2,2]");
    assert_eq!(stdout(&["element", "--k", "2", "--n", "2"]), stdout(&["element", "--spec", "CB:2 1|1 2@n=2"]));
}

#[test]
fn eigenvalues() {
    assert_eq!(stdout(&["eigen", "--spec", "S:2,1@n=2", "--mu", "2,1"]), "3");
    assert_eq!(stdout(&["eigen", "--spec", "H:2@n=3", "--mu", "2,1", "--module"]), "3");
    assert_eq!(stdout(&["eigen", "--spec", "H:1@n=2", "--mu", "2,1", "--d", "3"]), "3");
    let table = stdout(&["eigen", "--lambda", "1,1", "--n", "2", "--max-size", "2"]);
    assert_eq!(table, "∅\t0\n1\t0\n2\t0\n1,1\t2");
}

#[test]
fn harish_chandra_and_duality() {
    assert_eq!(stdout(&["hc", "--spec", "H:2@n=2"]), "x1·x2 + x2");
    assert_eq!(stdout(&["dual", "--spec", "H:2@n=2"]), stdout(&["element", "--spec", "I:2@n=2"]));
    assert_eq!(stdout(&["project", "--spec", "H:2@n=3"]), stdout(&["element", "--spec", "H:2@n=2"]));
    assert_eq!(stdout(&["project", "--embed", "--spec", "H:2@n=2"]), stdout(&["element", "--spec", "H:2@n=3"]));
}

#[test]
fn verify_suite_passes() {
    let out = capelli(&["verify", "--suite", "core", "--max-size", "3", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().ends_with("checks passed"));
    let json = stdout(&["verify", "--suite", "hc", "--max-size", "2", "--max-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["passed"], serde_json::json!(true));
}

#[test]
fn usage_errors() {
    for args in [
        &["element", "--spec", "X:1@n=2"][..],
        &["element", "--spec", "S:7@n=2"],
        &["verify", "--suite", "nope"],
        &["verify", "--max-n", "9"],
        &["element"],
        &["frobnicate"],
    ] {
        assert_eq!(capelli(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_round_trip_and_determinism() {
    let args = ["element", "--spec", "S:2,1@n=3", "--format", "json"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    let parsed = central_from_json(&v["central"]).unwrap();
    let spec: ElementSpec = "S:2,1@n=3".parse().unwrap();
    let built = spec.build(&ElementCache::new()).unwrap();
    assert_eq!(Some(&parsed), built.central());
}

#[test]
fn writes_output_file() {
    let path = std::env::temp_dir().join(format!("capelli-cli-test-{}.txt", std::process::id()));
    let out = capelli(&["element", "--spec", "H:1@n=2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "e[1,1] + e[2,2]\n");
    std::fs::remove_file(path).unwrap();
}
