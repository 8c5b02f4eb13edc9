use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trunctab")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trunctab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_all_agrees_on_staircase() {
    let out = run(&["count", "--shape", "shifted:delta(4)\\delta(1)", "--method", "all", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["agreement"], json!(true));
    assert_eq!(v["shape"], json!("shifted:delta(4)\\delta(1)"));
    for r in v["results"].as_array().unwrap() {
        assert_eq!(r["count"], json!("4"));
    }
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn count_formula_rectangle() {
    let v = json_of(&run(&["count", "--shape", "rect(3,3)\\delta(1)", "--method", "formula", "--json"]));
    assert_eq!(v["count"], json!("12"));
    assert_eq!(v["method"], json!("formula"));
}

#[test]
fn count_large_is_a_decimal_string() {
    let v = json_of(&run(&["count", "--shape", "rect(12,10)\\delta(4)", "--json"]));
    let s = v["count"].as_str().unwrap();
    assert!(s.len() > 20 && s.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn unsupported_family_exits_3() {
    let out = run(&["count", "--shape", "straight:[3,2]\\[3]", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(3));
    // the oracle still handles it
    let v = json_of(&run(&["count", "--shape", "straight:[3,2]\\[3]", "--method", "oracle", "--json"]));
    assert_eq!(v["count"], json!("1"));
}

#[test]
fn budget_exceeded_exits_4() {
    let out = run(&["count", "--shape", "rect(6,5)", "--method", "oracle", "--max-cells", "20"]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["gf", "--shape", "rect(6,5)", "--method", "oracle", "--max-cells", "20"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn bad_shape_exits_1() {
    assert_eq!(run(&["count", "--shape", "circle(3)"]).status.code(), Some(1));
    assert_eq!(run(&["count", "--shape", "shifted:[2,2]"]).status.code(), Some(1));
    assert_eq!(run(&["count"]).status.code(), Some(1));
}

#[test]
fn gf_oracle_and_closed() {
    let v = json_of(&run(&["gf", "--shape", "shifted:delta(3)\\delta(1)", "--order", "6", "--method", "oracle", "--json"]));
    // partitions into at most five parts
    assert_eq!(v, json!(["1", "1", "2", "3", "5", "7", "10"]));
    let v = json_of(&run(&["gf", "--shape", "shifted:delta(3)\\delta(1)", "--order", "0", "--json"]));
    assert_eq!(v, json!(["1"]));
    let out = run(&["gf", "--shape", "rect(4,4)\\almostsq(2)", "--order", "10", "--method", "both", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["equal"], json!(true));
    assert_eq!(v["closed"], v["oracle"]);
}

#[test]
fn gf_closed_needs_tall_rectangle() {
    assert_eq!(run(&["gf", "--shape", "rect(3,4)\\delta(1)"]).status.code(), Some(3));
    assert_eq!(run(&["gf", "--shape", "rect(4,3)\\delta(1)"]).status.code(), Some(0));
}

#[test]
fn verify_rsk_and_section9_pass() {
    let out = run(&["verify", "--suite", "rsk", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["cases"].as_array().unwrap().iter().any(|c| c["name"] == json!("worked example")));
    let out = run(&["verify", "--suite", "section9", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["cases"].as_array().unwrap().iter().any(|c| c["status"] == json!("info")));
}

#[test]
fn verify_thm1_reports_the_two_box_case() {
    let out = run(&["verify", "--suite", "thm1", "--max-n", "5", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    let failing: Vec<&Value> = v["cases"].as_array().unwrap().iter().filter(|c| c["status"] == json!("fail")).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["name"], json!("delta(2)\\delta(1)"));
}

#[test]
fn verify_unknown_suite() {
    assert_eq!(run(&["verify", "--suite", "thm9"]).status.code(), Some(1));
}

#[test]
fn phi_fixtures() {
    let out = run(&["phi", "--input", fixture("phi_staircase.json").to_str().unwrap(), "--roundtrip", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["p"]["rows"], json!([[3, 2, 1], [3, 2, 1, 1], [3, 3, 2, 1, 1], [2, 1, 1], [1]]));
    assert_eq!(v["p"]["inner"], json!([5, 3]));
    assert_eq!(v["roundtrip"], json!(true));

    let v = json_of(&run(&["phi", "--input", fixture("phi_rectangle.json").to_str().unwrap(), "--json"]));
    assert_eq!(v["p"]["rows"], json!([[2, 2, 1], [1, 1], [2], [2, 2], [1]]));
    assert_eq!(v["q"]["rows"], json!([[6, 6, 5, 4, 2, 2, 1], [5, 4, 3, 2, 1, 1], [4, 3, 1], [3, 1], [2]]));

    // feed the pair back
    let back = run_stdin(&["phi", "--inverse", "--roundtrip", "--json"], &v.to_string());
    assert_eq!(back.status.code(), Some(0));
    let original: Value = serde_json::from_str(&std::fs::read_to_string(fixture("phi_rectangle.json")).unwrap()).unwrap();
    let b = json_of(&back);
    assert_eq!(b["rows"], original["rows"]);
    assert_eq!(b["roundtrip"], json!(true));
}

#[test]
fn phi_zero_filling() {
    let input = json!({ "shape": "shifted:delta(3)\\delta(1)", "rows": [[0, 0], [0, 0], [0]] });
    let v = json_of(&run_stdin(&["phi", "--json"], &input.to_string()));
    assert_eq!(v["p"], json!({ "outer": [], "inner": [], "rows": [] }));
}

#[test]
fn phi_shape_mismatch() {
    let input = json!({ "shape": "shifted:delta(3)\\delta(1)", "rows": [[0, 0, 0]] });
    assert_eq!(run_stdin(&["phi"], &input.to_string()).status.code(), Some(1));
    assert_eq!(run_stdin(&["phi"], "not json").status.code(), Some(1));
}

#[test]
fn rsk_fixtures() {
    let v = json_of(&run(&["rsk", "--input", fixture("rsk_matrix.json").to_str().unwrap(), "--roundtrip", "--json"]));
    assert_eq!(v["p"], json!([[1, 1, 2, 2], [2, 3], [3]]));
    assert_eq!(v["q"], json!([[1, 1, 1, 3], [2, 2], [3]]));
    assert_eq!(v["roundtrip"], json!(true));
    let v = json_of(&run(&["rsk", "--inverse", "--input", fixture("rsk_pair.json").to_str().unwrap(), "--json"]));
    assert_eq!(v, json!([[1, 0, 2], [0, 2, 0], [1, 1, 0]]));
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("trunctab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = run(&[
        "rsk",
        "--input",
        fixture("rsk_matrix.json").to_str().unwrap(),
        "--output",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["p"], json!([[1, 1, 2, 2], [2, 3], [3]]));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn deterministic_output() {
    let a = run(&["verify", "--suite", "hooks", "--json"]);
    let b = run(&["verify", "--suite", "hooks", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}
