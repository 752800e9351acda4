use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn zdlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const BOOLEAN3: &str = r#"{
  "elements": ["0", "x", "y", "z", "xy", "xz", "yz", "1"],
  "order": {"kind": "covers", "pairs": [
    ["0","x"], ["0","y"], ["0","z"],
    ["x","xy"], ["x","xz"], ["y","xy"], ["y","yz"], ["z","xz"], ["z","yz"],
    ["xy","1"], ["xz","1"], ["yz","1"]]},
  "multiplication": {"kind": "meet"}
}"#;

const DIAMOND_MEET: &str = r#"{
  "elements": ["0", "a", "b", "c", "1"],
  "order": {"kind": "covers", "pairs": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]},
  "multiplication": {"kind": "meet"}
}"#;

const CHAIN: &str = r#"{
  "elements": ["0", "1", "2", "3"],
  "order": {"kind": "leq", "pairs": [["0","1"],["1","2"],["2","3"],["0","2"],["0","3"],["1","3"]]}
}"#;

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_fig3_fails_with_exit_one() {
    let out = zdlat(&["analyze", "--fixture", "fig3"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json_out(&out);
    assert_eq!(r["chi"], 4);
    assert_eq!(r["omega"], 3);
    assert_eq!(r["verdict"], "fails");
    assert_eq!(r["reduced"], false);
    assert_eq!(r["modular"], false);
    assert!(r.get("wall_time_ms").is_none());
}

#[test]
fn analyze_fig2_trivial_is_k4() {
    let out = zdlat(&["analyze", "--fixture", "fig2", "--mult", "trivial"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_out(&out);
    assert_eq!((r["chi"].as_u64(), r["omega"].as_u64()), (Some(4), Some(4)));
    assert_eq!(r["verdict"], "holds");
}

#[test]
fn analyze_boolean_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "b3.json", BOOLEAN3);
    let out = zdlat(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_out(&out);
    assert_eq!(r["chi"], 3);
    assert_eq!(r["omega"], 3);
    assert_eq!(r["minimal_prime_element_count"], 3);
    assert_eq!(r["minimal_prime_semi_ideal_count"], 3);
    assert_eq!(r["verdict"], "holds");
}

#[test]
fn analyze_at_another_element() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "b3.json", BOOLEAN3);
    let r = json_out(&zdlat(&["analyze", &path, "--element", "x"]));
    assert_eq!(r["element"], "x");
    // The 4-cycle y - z - xy - xz.
    assert_eq!(
        (r["vertices"].as_u64(), r["edges"].as_u64()),
        (Some(4), Some(4))
    );
    assert_eq!((r["chi"].as_u64(), r["omega"].as_u64()), (Some(2), Some(2)));
    let out = zdlat(&["analyze", &path, "--element", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let r = json_out(&zdlat(&["analyze", "--fixture", "fig2", "--timing"]));
    assert!(r["wall_time_ms"].is_u64());
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fig3 = zdlat(&["fixture", "fig3"]);
    assert!(fig3.status.success());
    let fig3_path = write(
        &dir,
        "fig3.json",
        std::str::from_utf8(&fig3.stdout).unwrap(),
    );
    assert_eq!(zdlat(&["validate", &fig3_path]).status.code(), Some(0));

    let diamond = write(&dir, "diamond.json", DIAMOND_MEET);
    let out = zdlat(&["validate", &diamond]);
    assert_eq!(out.status.code(), Some(2));
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["axiom"], "M3");
    assert_eq!(diag["witness"].as_array().unwrap().len(), 3);

    let bad = write(&dir, "bad.json", "{\"elements\": [");
    assert_eq!(zdlat(&["validate", &bad]).status.code(), Some(3));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        zdlat(&["validate", missing.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn validate_rejects_non_lattices() {
    let dir = tempfile::tempdir().unwrap();
    let no_join = r#"{"elements": ["0","a","b","c","d","1"],
      "order": {"kind": "covers", "pairs": [["0","a"],["0","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","1"],["d","1"]]}}"#;
    let path = write(&dir, "bowtie.json", no_join);
    assert_eq!(zdlat(&["validate", &path]).status.code(), Some(2));
    let cyclic = r#"{"elements": ["0","a","1"],
      "order": {"kind": "covers", "pairs": [["0","a"],["a","0"],["a","1"]]}}"#;
    let path = write(&dir, "cyclic.json", cyclic);
    assert_eq!(zdlat(&["validate", &path]).status.code(), Some(2));
}

#[test]
fn graph_order_and_mult_sense() {
    let out = zdlat(&["graph", "--fixture", "fig2", "--sense", "order"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "graph G {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"c\";\n  \"b\" -- \"c\";\n}\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("k4.dot");
    let out = zdlat(&[
        "graph",
        "--fixture",
        "fig2",
        "--sense",
        "mult",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&dot).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| l.ends_with("\";") && !l.contains("--"))
            .count(),
        4
    );
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 6);
}

#[test]
fn graph_of_chain_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "chain.json", CHAIN);
    let out = zdlat(&["graph", &path]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "graph G {\n}\n");
    let out = zdlat(&["graph", &path, "--sense", "order", "--ideal", "0,1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "graph G {\n}\n");
}

#[test]
fn graph_rejects_bad_ideal() {
    let out = zdlat(&[
        "graph",
        "--fixture",
        "fig2",
        "--sense",
        "order",
        "--ideal",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ring_modulus_and_sweep() {
    let r = json_out(&zdlat(&["ring", "--modulus", "30"]));
    assert_eq!((r["chi"].as_u64(), r["omega"].as_u64()), (Some(3), Some(3)));
    assert_eq!(r["instance"], "Z_30");
    let out = zdlat(&["ring", "--sweep", "2..20"]);
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 19);
    assert_eq!(lines[4]["instance"], "Z_6");
    assert_eq!(lines[4]["chi"], 2);
    assert_eq!(zdlat(&["ring", "--modulus", "1"]).status.code(), Some(2));
}

#[test]
fn search_reports_fig3_only() {
    let out = zdlat(&[
        "search",
        "--families",
        "boolean:1..5,chain:1..5,divisor:2310,random:10x16,fig2,fig3",
        "--seed",
        "11",
        "--budget",
        "500",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["instance"], "fig3");
    assert_eq!(lines[0]["chi"], 4);
    assert_eq!(lines[0]["omega"], 3);

    let clean = zdlat(&["search", "--families", "boolean:1..5", "--budget", "10"]);
    assert_eq!(clean.status.code(), Some(0));
    assert!(clean.stdout.is_empty());
    let bad = zdlat(&["search", "--families", "boolean:x"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn search_accepts_lattice_files() {
    let dir = tempfile::tempdir().unwrap();
    let fig3 = zdlat(&["fixture", "fig3"]);
    let path = write(
        &dir,
        "fig3.json",
        std::str::from_utf8(&fig3.stdout).unwrap(),
    );
    let out = zdlat(&["search", "--families", &format!("file:{path}")]);
    assert_eq!(out.status.code(), Some(1));
    let line: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(line["chi"], 4);
}

#[test]
fn analyze_timeout_exits_four_with_partial_report() {
    let out = zdlat(&["analyze", "--fixture", "fig3", "--timeout", "0.000000001"]);
    assert_eq!(out.status.code(), Some(4));
    let r = json_out(&out);
    assert_eq!(r["status"], "timeout");
    assert_eq!(r["vertices"], 12);
}

#[test]
fn analyze_and_search_are_byte_identical() {
    let a = zdlat(&["analyze", "--fixture", "fig3"]);
    let b = zdlat(&["analyze", "--fixture", "fig3"]);
    assert_eq!(a.stdout, b.stdout);
    let args = ["search", "--families", "random:25x20,fig3", "--seed", "5"];
    let a = zdlat(&args);
    let b = zdlat(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

#[test]
fn report_round_trip_reproduces_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = zdlat(&["fixture", "fig3"]);
    let path = write(
        &dir,
        "fig3.json",
        std::str::from_utf8(&fixture.stdout).unwrap(),
    );
    let from_file = json_out(&zdlat(&["analyze", &path]));
    let from_fixture = json_out(&zdlat(&["analyze", "--fixture", "fig3"]));
    for key in [
        "elements",
        "vertices",
        "edges",
        "chi",
        "omega",
        "minimal_prime_element_count",
    ] {
        assert_eq!(from_file[key], from_fixture[key], "{key}");
    }
}
