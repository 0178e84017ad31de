use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_en-models"))
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_maps_replay() {
    for (map, name) in [("phi", "phi_figure"), ("mu", "mu_square"), ("gamma_be", "be_weight")] {
        let input = golden(&format!("{name}.in.jsonl"));
        let out = run(&["map", map, input.to_str().unwrap()], None);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let expected = fs::read_to_string(golden(&format!("{name}.out.jsonl"))).unwrap();
        assert_eq!(stdout(&out), expected, "{name}");
    }
}

#[test]
fn map_reads_stdin_lines() {
    let input = "{\"dim\":1,\"points\":{\"a\":[\"0\"],\"b\":[\"1\"]}}\n{\"dim\":1,\"points\":{\"a\":[\"1\"],\"b\":[\"0\"]}}\n";
    let out = run(&["map", "psi"], Some(input));
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["edges"][0]["from"], "a");
    assert_eq!(lines[1]["edges"][0]["from"], "b");

    let out = run(&["map", "gamma_lp"], Some("{\"letters\":[\"a\",\"b\",\"a\"],\"bars\":[]}\n"));
    assert_eq!(stdout(&out).trim(), r#"{"vertices":["a","b"],"edges":[{"from":"a","to":"b","w":2}],"maxWeight":2,"variant":"acyclic"}"#);

    let phi_m = run(&["map", "phi_M", golden("phi_figure.in.jsonl").to_str().unwrap()], None);
    let mu_in = fs::read_to_string(golden("mu_square.in.jsonl")).unwrap();
    assert_eq!(stdout(&phi_m), mu_in);
}

#[test]
fn enumeration_counts() {
    let count = |args: &[&str]| stdout(&run(args, None)).lines().count();
    assert_eq!(count(&["enumerate", "graphs", "--vertices", "a,b", "--n", "3"]), 6);
    assert_eq!(count(&["enumerate", "graphs", "--vertices", "a,b,c", "--n", "2", "--variant", "extended"]), 60);
    assert_eq!(count(&["enumerate", "trees", "--vertices", "a,b", "--n", "2"]), 4);
    assert_eq!(count(&["enumerate", "paths", "--vertices", "a"]), 1);
    assert_eq!(count(&["enumerate", "besimplices", "--vertices", "a,b", "--n", "2"]), 4);
    assert_eq!(count(&["enumerate", "welements", "--vertices", "a,b,c", "--n", "2"]), 96);
}

#[test]
fn enumeration_is_deterministic_and_writes_files() {
    let dir = std::env::temp_dir().join(format!("en-models-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.jsonl");
    let out = run(&["enumerate", "graphs", "--vertices", "a,b,c", "--out", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let again = run(&["enumerate", "graphs", "--vertices", "a,b,c"], None);
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&again));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn export_round_trips() {
    let graph = fs::read_to_string(golden("mu_square.out.jsonl")).unwrap();
    let pretty = stdout(&run(&["export", "--format", "json"], Some(&graph)));
    assert!(pretty.contains("\n  \"vertices\""));
    let parsed: Value = serde_json::from_str(&pretty).unwrap();
    assert_eq!(parsed, serde_json::from_str::<Value>(&graph).unwrap());
    assert_eq!(stdout(&run(&["export"], Some(&pretty))), pretty);

    let dot = stdout(&run(&["export", "--format", "dot"], Some(&graph)));
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"a\" -> \"b\" [label=\"2\"]"));

    let tree = fs::read_to_string(golden("mu_square.in.jsonl")).unwrap();
    let pretty = stdout(&run(&["export"], Some(&tree)));
    assert_eq!(serde_json::from_str::<Value>(&pretty).unwrap(), serde_json::from_str::<Value>(&tree).unwrap());
    let refused = run(&["export", "--format", "dot"], Some(&tree));
    assert_eq!(refused.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "graphs", "--n", "x"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"], None).status.code(), Some(2));
    assert_eq!(run(&["map", "psi"], Some("not json\n")).status.code(), Some(2));
    assert_eq!(run(&["export", "--format", "svg"], Some("{}")).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "graphs", "--vertices", "a,b,c,d,e,f"], None).status.code(), Some(3));
    assert_eq!(run(&["enumerate", "graphs", "--vertices", "a,b,c", "--caps", "vertices=2"], None).status.code(), Some(3));
    assert_eq!(run(&["verify", "operad-laws", "--samples", "50"], None).status.code(), Some(0));
    // the listed slice poset does not match the computed one
    assert_eq!(run(&["verify", "counterexample-s1"], None).status.code(), Some(1));
}

#[test]
fn reports_are_reproducible() {
    let strip = |o: &Output| {
        let mut v: Value = serde_json::from_str(&stdout(o)).unwrap();
        v.as_object_mut().unwrap().remove("wallMs");
        v
    };
    let args = ["verify", "lp-contract-13x", "--seed", "11", "--samples", "200"];
    let first = run(&args, None);
    let second = run(&args, None);
    assert_eq!(strip(&first), strip(&second));
    let report = strip(&first);
    assert_eq!(report["suite"], "lp-contract-13x");
    assert_eq!(report["seed"], 11);
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["claim"].is_string() && c["basis"].is_string()));

    let text = stdout(&run(&["verify", "proper-criterion-57", "--format", "text"], None));
    assert!(text.lines().last().unwrap().ends_with("pass"));
}

#[test]
fn recomputed_oracles_agree_with_frozen_values() {
    for suite in ["operad-laws", "mu-image-11x", "thm-graphs-44", "bv-retract-82"] {
        let out = run(&["verify", suite, "--recompute-oracles", "--samples", "50"], None);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
    }
}
