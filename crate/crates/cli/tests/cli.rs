//! End-to-end runs of the `arcperm` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcperm"))
        .args(args)
        .env_remove("ARCPERM_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn gen_lists_families() {
    let out = run(&["gen", "4", "Z"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2143\n3412\n# count 2\n");

    let a4 = run(&["gen", "--n", "4", "--family", "A"]);
    let lines: Vec<String> = stdout(&a4).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(lines.len(), 16);

    let z3 = json(&run(&["gen", "3", "Z", "--format", "json"]));
    assert_eq!(z3["count"], 0);
    assert_eq!(z3["items"].as_array().unwrap().len(), 0);

    let t5 = json(&run(&["gen", "5", "t", "--format", "json"]));
    assert_eq!(t5["count"], 10);
    let shuf = json(&run(&["gen", "4", "SHUF", "--format", "json"]));
    assert_eq!(shuf["count"], 12);
}

#[test]
fn gen_rejects_bad_input() {
    assert_eq!(run(&["gen", "4", "Q"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "13", "A"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "4"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "x", "A"]).status.code(), Some(2));
    let raised = Command::new(env!("CARGO_BIN_EXE_arcperm"))
        .args(["gen", "13", "L"])
        .env("ARCPERM_MAX_N", "13")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
}

#[test]
fn encode_and_decode() {
    assert_eq!(stdout(&run(&["encode", "4 3 5 2 1 7 6", "psi"])), "3,0,1,0,0,0\n");
    assert_eq!(stdout(&run(&["encode", "1 2 5 4 3", "nu"])), "A[AD]D\n");
    assert_eq!(stdout(&run(&["decode", "3,0,1,0,0,0", "psi"])), "4352176\n");
    assert_eq!(stdout(&run(&["decode", "DAA[DA]DA", "nu"])), "65781423\n");
    assert_eq!(run(&["encode", "1 3 2 4"]).status.code(), Some(2));
    assert_eq!(run(&["decode", "A[AA]", "nu"]).status.code(), Some(2));
}

#[test]
fn decode_then_encode_is_identity() {
    for code in ["0", "1,1", "2,0,1", "5,1,0,1,1,0", "0,0,0,0,0,0,0,0,0,0"] {
        let p = stdout(&run(&["decode", code]));
        let back = stdout(&run(&["encode", p.trim()]));
        assert_eq!(back.trim(), code);
    }
}

#[test]
fn bijections_round_trip() {
    let t = stdout(&run(&["biject", "8 9 10 7 11 1 2 6 5 3 4"]));
    assert_eq!(t.trim(), "1 2 3 5 8 11 / 4 7 / 6 / 9 / 10");
    let back = stdout(&run(&["biject", t.trim(), "phi", "--inverse"]));
    assert_eq!(back.trim(), "8,9,10,7,11,1,2,6,5,3,4");
    let s = stdout(&run(&["biject", "3 2 4 1 5 6 11 7 10 9 8", "shape"]));
    assert_eq!(s.trim(), "1 2 4 6 7 9 / 3 8 / 5 / 10 / 11");
    assert_eq!(run(&["biject", "1234"]).status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "maximal-chains", "3..5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let expected: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["expected"].as_str().unwrap()).collect();
    assert_eq!(expected, vec!["2", "4", "24"]);
    assert_eq!(report["passed"], true);

    assert_eq!(run(&["verify", "regev", "4..7"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "tz-equidistribution", "--range", "4..8"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "regev", "7..4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "regev", "4..9"]).status.code(), Some(2));
    assert!(stdout(&run(&["verify", "--list"])).contains("shuffle-weak-order"));
}

#[test]
fn graphs_are_deterministic() {
    let a = run(&["graph", "4", "xn"]);
    let b = run(&["graph", "--n", "4", "xn"]);
    assert_eq!(a.stdout, b.stdout);
    let x4 = json(&a);
    assert_eq!(x4["nodes"].as_array().unwrap().len(), 16);
    assert_eq!(x4["edges"].as_array().unwrap().len(), 20);
    let w = json(&run(&["graph", "4", "weak-u"]));
    assert_eq!(w["nodes"].as_array().unwrap().len(), 14);
    let d = stdout(&run(&["graph", "3", "dominance", "--format", "dot"]));
    assert!(d.starts_with("digraph G {"));
    assert_eq!(d.matches("->").count(), 5);
    assert_eq!(run(&["graph", "9", "xn"]).status.code(), Some(2));
}

#[test]
fn writes_to_a_file() {
    let path = std::env::temp_dir().join(format!("arcperm-cli-{}.json", std::process::id()));
    let out = run(&["graph", "3", "xn", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 3);
}
