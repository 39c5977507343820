use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use flowtype::{fixtures, generators, Capacity, FlowNetwork, ReassemblingTree};
use serde_json::Value;
use tempfile::TempDir;

fn flowtype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flowtype")).args(args).output().expect("binary runs")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn typing_of_chain() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "chain.json", &fixtures::chain().to_json());
    let out = flowtype(&["typing", "--input", s(&input)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let typing = stdout_json(&out);
    let entries = typing["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    let a_only = entries.iter().find(|e| e["A"] == serde_json::json!(["a"]) && e["B"] == serde_json::json!([])).unwrap();
    assert_eq!((a_only["lo"].as_str(), a_only["hi"].as_str()), (Some("0"), Some("3")));
}

#[test]
fn typing_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "tri.json", &fixtures::triangle().to_json());
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        assert!(flowtype(&["typing", "--input", s(&input), "--out", s(p)]).status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn typing_without_interface() {
    let dir = TempDir::new().unwrap();
    let mut net = FlowNetwork::new("closed");
    net.add_vertex("u").add_vertex("v");
    net.add_edge("x", Some("u"), Some("v"), Capacity::from_int(1));
    let input = write(&dir, "closed.json", &net.to_json());
    let out = flowtype(&["typing", "--input", s(&input)]);
    assert!(out.status.success());
    let entries = stdout_json(&out)["entries"].as_array().unwrap().clone();
    assert_eq!(entries.len(), 1);
    assert_eq!((entries[0]["lo"].as_str(), entries[0]["hi"].as_str()), (Some("0"), Some("0")));
}

#[test]
fn typing_of_prism_reports_stats() {
    let dir = TempDir::new().unwrap();
    let pg = generators::prism(3, 0).unwrap();
    let input = write(&dir, "prism.json", &pg.to_json());
    let stats = dir.path().join("stats.json");
    let out = flowtype(&["typing", "--input", s(&input), "--stats", s(&stats)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let stats: Value = serde_json::from_str(&fs::read_to_string(&stats).unwrap()).unwrap();
    assert_eq!(stats["k"], 2);
    assert!(stats["alpha"].as_u64().unwrap() <= 4);
}

fn k5() -> FlowNetwork {
    let mut net = FlowNetwork::new("k5");
    for i in 0..5 {
        net.add_vertex(format!("v{i}"));
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            net.add_edge(format!("e{i}{j}"), Some(&format!("v{i}")), Some(&format!("v{j}")), Capacity::from_int(1));
        }
    }
    net.add_edge("in", None, Some("v0"), Capacity::from_int(3));
    net.add_edge("out", Some("v4"), None, Capacity::from_int(3));
    net
}

#[test]
fn non_planar_typing_needs_tree() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "k5.json", &k5().to_json());
    let out = flowtype(&["typing", "--input", s(&input)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--tree"));
    let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
    let tree = write(&dir, "tree.json", &ReassemblingTree::left_comb(&names).unwrap().to_json());
    let out = flowtype(&["typing", "--input", s(&input), "--tree", s(&tree)]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn verify_passes_on_fixtures() {
    let dir = TempDir::new().unwrap();
    for net in [fixtures::chain(), fixtures::cycle2(), k5()] {
        let input = write(&dir, "net.json", &net.to_json());
        let out = flowtype(&["verify", "--input", s(&input), "--samples", "50"]);
        assert!(out.status.success(), "{}: {}", net.name, stderr(&out));
        let report = stdout_json(&out);
        assert_eq!(report["status"], "PASS");
        assert_eq!(report["equal"], report["entries"]);
    }
}

#[test]
fn verify_catches_injected_fault() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "chain.json", &fixtures::chain().to_json());
    let out = flowtype(&["verify", "--input", s(&input), "--perturb", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("FAIL: entry ("), "{}", stderr(&out));
    let report = stdout_json(&out);
    assert_eq!(report["status"], "FAIL");
    assert_eq!(report["mismatches"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_refuses_above_limit() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "star.json", &fixtures::star(&[1, 1, 1], &[1, 1]).to_json());
    let out = flowtype(&["verify", "--input", s(&input), "--oracle-limit", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("oracle limit of 4"));
}

#[test]
fn peel_fixtures() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "tri.json", &fixtures::triangle().to_json());
    let out = flowtype(&["peel", "--input", s(&input)]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout_json(&out)["k"], 1);
    for (pg, k) in [(generators::prism(3, 0).unwrap(), 2), (generators::cube(0).unwrap(), 2)] {
        let input = write(&dir, "pg.json", &pg.to_json());
        let out = flowtype(&["peel", "--input", s(&input)]);
        assert!(out.status.success());
        assert_eq!(stdout_json(&out)["k"], k);
        assert!(stderr(&out).contains("2 <= 2 <= 3: OK"), "{}", stderr(&out));
    }
}

#[test]
fn bench_csv() {
    let out = flowtype(&["bench", "--family", "nested-cycles", "--k", "2", "--sizes", "20,40"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,delta,alpha,ops,time_ms");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].split(',').nth(1) == Some("2"));
    assert!(stderr(&out).contains("linear fit"));

    let out = flowtype(&["bench", "--family", "path-of-rings", "--sizes", "0"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,k,delta,alpha,ops,time_ms\n");

    let out = flowtype(&["bench", "--family", "hypercube"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(flowtype(&["typing"]).status.code(), Some(2));
    assert_eq!(flowtype(&["typing", "--input", "/nonexistent.json"]).status.code(), Some(2));
}
