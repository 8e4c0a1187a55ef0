//! End-to-end tests of the binary: flag handling, output shapes, and the
//! exit-code contract (0 pass, 1 check failed, 2 usage or parse error,
//! 3 resource guard).

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn entangle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entangle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn entangle_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_entangle"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn compute_known_values() {
    let cases = [
        (vec!["compute", "--edges", "0 1"], 1),
        (vec!["compute", "--graph6", "@"], 0),
        (vec!["compute", "--graph6", "Bw"], 2),
        (vec!["compute", "--edges", "0 1, 1 2"], 1),
    ];
    for (args, expected) in cases {
        let v = stdout_json(&entangle(&args));
        assert_eq!(v["entanglement"], expected, "args {args:?}");
    }
}

#[test]
fn compute_reports_per_k() {
    let v = stdout_json(&entangle(&["compute", "--graph6", "Bw"]));
    assert_eq!(v["n"], 3);
    assert_eq!(v["directed"], false);
    let per_k: Vec<bool> = v["per_k"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["win"].as_bool().unwrap())
        .collect();
    assert_eq!(per_k, [false, false, true]);
}

#[test]
fn compute_directed_input() {
    let v = stdout_json(&entangle(&["compute", "--edges", "n 3 directed, 0 1, 1 2, 2 0"]));
    assert_eq!(v["directed"], true);
    assert_eq!(v["entanglement"], 1);
}

#[test]
fn compute_text_output() {
    let out = entangle(&["compute", "--graph6", "A_", "--output", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n 2\ndirected false\nentanglement 1\nk 0 lose\nk 1 win\n");
}

#[test]
fn compute_rejects_malformed_input() {
    for args in [
        vec!["compute", "--edges", "0"],
        vec!["compute", "--edges", "0 zero"],
        vec!["compute", "--edges", "0 0"],
        vec!["compute", "--graph6", "~~~"],
        vec!["compute", "--graph6", ""],
        vec!["compute"],
    ] {
        let out = entangle(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn compute_rejects_conflicting_sources() {
    let out = entangle(&["compute", "--edges", "0 1", "--graph6", "A_"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let edge_path = dir.path().join("g.edges");
    std::fs::write(&edge_path, "# triangle\nn 3\n0 1\n1 2\n2 0\n").unwrap();
    let v = stdout_json(&entangle(&["compute", "--input", edge_path.to_str().unwrap()]));
    assert_eq!(v["entanglement"], 2);

    let g6_path = dir.path().join("g.g6");
    std::fs::write(&g6_path, "Bw\n").unwrap();
    let v = stdout_json(&entangle(&[
        "compute",
        "--input",
        g6_path.to_str().unwrap(),
        "--format",
        "graph6",
    ]));
    assert_eq!(v["entanglement"], 2);

    let out = entangle(&["compute", "--input", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_respects_the_node_budget() {
    let out = entangle_env(&["compute", "--graph6", "Bw"], "ENTANGLE_MAX_NODES", "10");
    assert_eq!(out.status.code(), Some(3));
    let out = entangle_env(&["compute", "--graph6", "Bw"], "ENTANGLE_MAX_NODES", "pony");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_on_small_universes() {
    for suite in ["prop1", "lemma1", "theorem2", "prop3", "transfer"] {
        let out = entangle(&["verify", "--suite", suite, "--nmax", "3"]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(!text.is_empty());
        for line in text.lines() {
            let v: Value = serde_json::from_str(line).expect("JSONL");
            assert_eq!(v["suite"], suite);
            assert_eq!(v["pass"], true, "{line}");
            assert!(v.get("counterexample").is_none());
        }
    }
}

#[test]
fn verify_rejects_unknown_suite_and_large_universe() {
    let out = entangle(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = entangle(&["verify", "--suite", "theorem2", "--nmax", "9"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn obstructions_for_k0_are_exactly_one_edge() {
    let v = stdout_json(&entangle(&["obstructions", "--k", "0", "--nmax", "3"]));
    assert_eq!(v["members"], serde_json::json!(["A_"]));
    assert_eq!(v["count"], 1);
    assert_eq!(v["complete"], true);
    assert_eq!(v["all_exactly_k_plus_1"], true);
}

#[test]
fn obstructions_for_k1_include_the_triangle() {
    let v = stdout_json(&entangle(&["obstructions", "--k", "1", "--nmax", "4"]));
    let members: Vec<&str> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap())
        .collect();
    assert!(members.contains(&"Bw"), "members {members:?}");
}

#[test]
fn obstructions_above_reach_are_empty() {
    let v = stdout_json(&entangle(&["obstructions", "--k", "5", "--nmax", "4"]));
    assert_eq!(v["count"], 0);
    assert_eq!(v["all_exactly_k_plus_1"], true);
}

#[test]
fn obstructions_write_members_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("members.g6");
    let out = entangle(&[
        "obstructions",
        "--k",
        "0",
        "--nmax",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "A_\n");
}

#[test]
fn obstructions_deduplicate_file_input_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("candidates.g6");
    let mut f = std::fs::File::create(&path).unwrap();
    // K2 twice under different labelings, plus the triangle.
    writeln!(f, "A_").unwrap();
    writeln!(f, "A_").unwrap();
    writeln!(f, "Bw").unwrap();
    drop(f);
    let out = entangle(&["obstructions", "--k", "0", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["duplicate_inputs"], 1);
    assert_eq!(v["complete"], false);
    // The triangle is not minimal for k = 0; only K2 remains.
    assert_eq!(v["members"], serde_json::json!(["A_"]));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("duplicate"), "stderr: {stderr}");
}

#[test]
fn obstructions_require_exactly_one_source() {
    let out = entangle(&["obstructions", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = entangle(&["obstructions", "--k", "0", "--nmax", "3", "--input", "x.g6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = entangle(&["obstructions", "--k", "0", "--nmax", "7"]);
    assert_eq!(out.status.code(), Some(3));
}
