use std::path::Path;
use std::process::{Command, Output};

use maxclique::generators::{complete, generate_hamming};
use maxclique::io::{write_graph, GraphFormat};
use maxclique::max_clique;
use serde_json::Value;
use tempfile::TempDir;

fn maxclique(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxclique"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = maxclique(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn hamming64(dir: &TempDir) -> String {
    let p = path(dir, "ham64.clq");
    write_graph(Path::new(&p), &generate_hamming(6, 4).unwrap(), GraphFormat::Dimacs).unwrap();
    p
}

#[test]
fn exact_on_hamming6_4() {
    let dir = TempDir::new().unwrap();
    let input = hamming64(&dir);
    let out = maxclique(&["exact", "--input", &input]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("clique size") && l.ends_with(" 4")), "{text}");

    let report = json(&["exact", "--input", &input, "--json"]);
    assert_eq!(report["result"]["size"], 4);
    assert_eq!(report["counters"]["p2"], 704);
}

#[test]
fn json_report_has_every_field_and_matches_library() {
    let dir = TempDir::new().unwrap();
    let input = hamming64(&dir);
    let report = json(&["exact", "--input", &input, "--json", "--lb", "2"]);
    for key in ["command", "graph", "result", "counters", "elapsed_seconds", "seeds", "workers"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    for key in ["n", "m", "max_degree"] {
        assert!(report["graph"].get(key).is_some(), "missing graph.{key}");
    }
    for key in ["size", "members", "found"] {
        assert!(report["result"].get(key).is_some(), "missing result.{key}");
    }
    assert_eq!(report["command"], format!("exact --input {input} --json --lb 2"));
    assert_eq!(report["graph"]["n"], 64);
    assert_eq!(report["graph"]["m"], 704);
    assert_eq!(report["graph"]["max_degree"], 22);

    let lib = max_clique(&generate_hamming(6, 4).unwrap(), 2);
    let c = &report["counters"];
    let counters = [&c["p1"], &c["p2"], &c["p3"], &c["p4"], &c["p5"]].map(|v| v.as_u64().unwrap());
    let s = lib.stats;
    assert_eq!(counters, [s.p1, s.p2, s.p3, s.p4, s.p5]);
    let members: Vec<u64> = serde_json::from_value(report["result"]["members"].clone()).unwrap();
    let expected: Vec<u64> = lib.members.iter().map(|&v| v as u64 + 1).collect();
    assert_eq!(members, expected, "DIMACS labels are 1-based");

    let reparsed: Value = serde_json::from_str(&report.to_string()).unwrap();
    assert_eq!(reparsed, report);
}

#[test]
fn lower_bound_at_omega_reports_not_found() {
    let dir = TempDir::new().unwrap();
    let report = json(&["exact", "--input", &hamming64(&dir), "--lb", "4", "--json"]);
    assert_eq!(report["result"]["found"], false);
    assert_eq!(report["result"]["size"], 4);
    assert_eq!(report["result"]["members"], Value::Array(vec![]));
}

#[test]
fn heuristic_on_k5() {
    let dir = TempDir::new().unwrap();
    let input = path(&dir, "k5.edges");
    write_graph(Path::new(&input), &complete(5), GraphFormat::EdgeList).unwrap();
    for policy in ["max-degree", "random"] {
        let report = json(&["heuristic", "--input", &input, "--policy", policy, "--json"]);
        assert_eq!(report["result"]["size"], 5);
    }
    let report = json(&["heuristic", "--input", &input, "--policy", "random", "--seed", "7", "--restarts", "3", "--json"]);
    assert_eq!(report["seeds"], serde_json::json!([7, 8, 9]));
}

#[test]
fn parallel_matches_sequential() {
    let dir = TempDir::new().unwrap();
    let input = hamming64(&dir);
    for workers in ["1", "4"] {
        let report = json(&["parallel", "--input", &input, "--workers", workers, "--chunk", "3", "--json"]);
        assert_eq!(report["result"]["size"], 4);
        assert_eq!(report["counters"]["p2"], 704);
        assert_eq!(report["workers"], workers.parse::<u64>().unwrap());
    }
}

#[test]
fn omega_of_identical_files_is_one() {
    let dir = TempDir::new().unwrap();
    let a = path(&dir, "a.txt");
    std::fs::write(&a, "0 1 2 3\n3 4 5\n6 7 8 9\n").unwrap();
    let out = maxclique(&["omega", "--truth", &a, "--found", &a, "--n", "10"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
    let report = json(&["omega", "--truth", &a, "--found", &a, "--n", "10", "--json"]);
    assert_eq!(report["omega"], 1.0);
}

#[test]
fn omega_accepts_membership_truth() {
    let dir = TempDir::new().unwrap();
    let truth = path(&dir, "truth.dat");
    let found = path(&dir, "found.txt");
    std::fs::write(&truth, "1 1\n2 1\n3 1 2\n4 2\n5 2\n").unwrap();
    std::fs::write(&found, "1 2 3\n3 4 5\n").unwrap();
    let report = json(&[
        "omega", "--truth", &truth, "--truth-format", "membership", "--found", &found, "--n", "5", "--json",
    ]);
    assert_eq!(report["omega"], 1.0);
}

#[test]
fn generate_then_detect_communities() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "g.edges");
    let report = json(&[
        "gen", "rmat", "--params", "0.45,0.15,0.15,0.25", "--scale", "7", "--edges", "800", "--seed", "3",
        "--out", &graph, "--json",
    ]);
    assert_eq!(report["graph"]["n"], 128);
    let comm = path(&dir, "comm.txt");
    let report = json(&["communities", "--input", &graph, "--k", "3", "--c", "2", "--out", &comm, "--json"]);
    let lines = std::fs::read_to_string(&comm).unwrap().lines().count();
    assert_eq!(report["communities"].as_u64().unwrap() as usize, lines);
    let report = json(&["omega", "--truth", &comm, "--found", &comm, "--n", "128", "--json"]);
    assert_eq!(report["omega"], 1.0);
}

#[test]
fn gen_johnson_and_oracle() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "j.clq");
    let report = json(&["gen", "johnson", "--set", "8", "--weight", "2", "--distance", "4", "--out", &graph, "--json"]);
    assert_eq!(report["graph"]["m"], 210);
    let report = json(&["oracle", "--input", &graph, "--json"]);
    assert_eq!(report["result"]["size"], 4);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(maxclique(&["exact", "--input", &path(&dir, "missing.clq")]).status.code(), Some(1));

    let bad = path(&dir, "bad.clq");
    std::fs::write(&bad, "p edge 3 1\ne 1 x\n").unwrap();
    assert_eq!(maxclique(&["exact", "--input", &bad]).status.code(), Some(1));

    assert_eq!(maxclique(&["exact", "--input", &bad, "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(maxclique(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(maxclique(&[]).status.code(), Some(2));
}
