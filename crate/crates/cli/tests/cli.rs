use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_axial");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], threads: &str) -> Output {
    Command::new(BIN).args(args).env("AXIAL_THREADS", threads).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn add_model() -> String {
    format!("file:{}/../../models/add.json", env!("CARGO_MANIFEST_DIR"))
}

/// `value` must equal `ln(p)/n` converted to the requested base.
fn check_consistent(doc: &Value, base: f64) {
    let p: f64 = match doc["p"].as_str().unwrap().split_once('/') {
        Some((a, b)) => a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap(),
        None => doc["p"].as_str().unwrap().parse().unwrap(),
    };
    let n = doc["n"].as_f64().unwrap();
    let nats = p.ln() / n;
    assert!((doc["nats"].as_f64().unwrap() - nats).abs() < 1e-9, "{doc}");
    assert!((doc["value"].as_f64().unwrap() - nats / base.ln()).abs() < 1e-9, "{doc}");
}

#[test]
fn add_from_file() {
    let doc = json(&["hind", &add_model()]);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["p"], "650");
    assert_eq!(doc["n"], 2);
    check_consistent(&doc, std::f64::consts::E);
}

#[test]
fn log_bases() {
    let two = json(&["--log-base", "2", "hind", "hard_square"]);
    assert_eq!(two["base"], "2");
    assert!((two["value"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    check_consistent(&two, 2.0);
    let ten = json(&["--log-base", "10", "hind", "coloring:4"]);
    check_consistent(&ten, 10.0);
}

#[test]
fn pressure_with_weights() {
    let unit = json(&["pressure", "hard_square"]);
    let hind = json(&["hind", "hard_square"]);
    assert!((unit["nats"].as_f64().unwrap() - hind["nats"].as_f64().unwrap()).abs() < 1e-12);
    let w = json(&["pressure", "hard_square", "--weights", "1=3/2"]);
    assert!(w["nats"].as_f64().unwrap() > unit["nats"].as_f64().unwrap());
}

#[test]
fn classify_verdicts() {
    let c3 = json(&["classify", "coloring:3"]);
    assert_eq!(c3["verdict"], "exactly_k");
    assert_eq!(c3["k"], 3);
    let hs = json(&["classify", "hard_square"]);
    assert_eq!(hs["verdict"], "unique");
    let rll = json(&["classify", "rll:1,3"]);
    assert_eq!(rll["verdict"], "multiple");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["hind", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["hind", "file:/nonexistent/model.json"]).status.code(), Some(2));
    assert_eq!(run(&["--caps", "bogus=1", "hind", "hard_square"]).status.code(), Some(2));
    assert_eq!(run(&["count", "hard_square"]).status.code(), Some(2));
    assert_eq!(run(&["--caps", "vertices=1", "hind", "coloring:4"]).status.code(), Some(3));
    assert_eq!(
        run(&["--caps", "sites=3", "count", "hard_square", "--n", "2", "--d", "2", "--method", "backtrack"]).status.code(),
        Some(3)
    );
    let out = run(&["classify", "coloring:3", "--max-count", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["enumeration_complete"], false);
    assert_eq!(run_env(&["hind", "hard_square"], "zero").status.code(), Some(2));
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        vec!["classify", "beach:2"],
        vec!["cycles", "coloring:4"],
        vec!["table", "plastic", "--n", "1,2,4", "--d", "1,2"],
        vec!["sample", "hard_square", "--n", "3", "--d", "2", "--count", "500", "--seed", "9"],
        vec!["dump-graph", "rll:2,5"],
    ] {
        let a = run(&args);
        let b = run(&args);
        let c = run_env(&args, "1");
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, c.stdout, "{args:?}");
    }
}

#[test]
fn dump_graph_text() {
    let out = run(&["--format", "text", "dump-graph", "hard_square"]);
    let expected = "vertex 0 {0}\nvertex 1 {0,1}\nedge 0 0 1 {0}\nedge 0 1 2 {0,1}\nedge 1 0 1 {0}\n";
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    json(&["hind", "hard_square", "--dump-graph", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim_end(), expected.trim_end());
}

#[test]
fn table_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let doc = json(&["table", "hard_square", "--n", "1,2", "--d", "1", "--csv", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,d,count,estimate_nats,h_ind_nats");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("1,1,2,"));
    assert!(lines[2].starts_with("2,1,3,"));
    assert_eq!(doc["rows"].as_array().unwrap().len(), 2);
    let stdout = run(&["--format", "csv", "table", "hard_square", "--n", "1,2", "--d", "1"]).stdout;
    assert_eq!(String::from_utf8(stdout).unwrap().trim_end(), text.trim_end());
}

#[test]
fn sample_emit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let doc = json(&[
        "sample", "hard_square", "--n", "2", "--d", "2", "--count", "25", "--seed", "3", "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(doc["violations"], 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "sample,phase,s0_0,s0_1,s1_0,s1_1");
    assert_eq!(lines.len(), 26);
    assert_eq!(run(&["sample", "hard_square", "--n", "2", "--d", "2", "--cycle", "5"]).status.code(), Some(2));
}

#[test]
fn count_and_entropy1d() {
    let doc = json(&["count", "hard_square", "--n", "4", "--d", "2"]);
    assert_eq!(doc["count"], "1234");
    let h = json(&["entropy1d", "hard_square"]);
    let golden = ((1.0 + 5f64.sqrt()) / 2.0).ln();
    assert!((h["nats"].as_f64().unwrap() - golden).abs() < 1e-9);
}
