//! End-to-end tests of the command-line interface.

use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["racg".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = racg::run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("racg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify_text_and_json() {
    let (code, out, _) = run(&["classify", &fixture("fig_afifthf_delta.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("subtype: A.2"));
    assert!(out.contains("divergence: quadratic"));

    let (code, out, _) = run(&["classify", "--json", &fixture("fig_bprime_b1.txt")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["subtype"], "B.1");
    assert_eq!(v["boundary"]["sierpinski_carpet"]["value"], true);
}

#[test]
fn standing_failure_exits_2() {
    let (code, out, err) = run(&["classify", &fixture("c5.txt")]);
    assert_eq!(code, 2);
    assert!(err.contains("StandingAssumptionsViolated"));
    assert!(out.contains("standing assumptions: fail"));
    let (code, _, err) = run(&["tree", &fixture("fig_afirst_g1.txt")]);
    assert_eq!(code, 2);
    assert!(err.contains("not a planar flag complex"));
}

#[test]
fn parse_and_usage_errors_exit_1() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"edges\": [[\"a\", \"a\"]]}").unwrap();
    let (code, _, err) = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("parse error"));
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["classify"]).0, 1);
    assert_eq!(run(&["classify", "/nonexistent/graph.txt"]).0, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("classify"));
}

#[test]
fn tree_dot_json_and_emit() {
    let emitted = scratch("tree.dot");
    let (code, out, _) = run(&["tree", &fixture("fig_afifthf_delta.json"), "--emit-tree", emitted.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph T_r {"));
    assert_eq!(std::fs::read_to_string(&emitted).unwrap(), out);
    let (_, out, _) = run(&["tree", "--json", &fixture("fig_afifthf_delta.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mut weights: Vec<i64> = v["nodes"].as_array().unwrap().iter().map(|n| n["weight"].as_i64().unwrap()).collect();
    weights.sort();
    assert_eq!(weights, [2, 2, 2, 3]);
}

#[test]
fn bisim_on_trees_and_graphs() {
    let (code, out, _) = run(&["bisim", &fixture("tr.json"), &fixture("tr_prime.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("not bisimilar"));
    assert!(out.contains("q0 -- q0"));
    let (code, out, _) =
        run(&["bisim", "--json", &fixture("fig_afifthf_delta.json"), &fixture("fig_afifthf_delta.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["bisimilar"], true);
}

#[test]
fn peripheral_and_features() {
    let (code, out, _) = run(&["peripheral", "--json", &fixture("fig_afirst_g1.txt")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["method"], "closure");
    assert_eq!(v["members"].as_array().unwrap().len(), 8);
    let (_, out, _) = run(&["peripheral", &fixture("fig_afifthf_delta.json")]);
    assert!(out.starts_with("thick"));

    let (code, out, _) = run(&["features", "--json", &fixture("fig_asecond_g2.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["nonparabolic_cut_pair"]["value"]["status"], "yes");
    assert_eq!(v["nonparabolic_cut_pair"]["value"]["witness"]["poles"], serde_json::json!(["u", "v"]));
}

#[test]
fn batch_over_directory_is_deterministic() {
    let dir = scratch("batch");
    std::fs::create_dir_all(&dir).unwrap();
    for f in ["c5.txt", "fig_bprime_b1.txt", "fig_aprime_a2.txt", "octahedron.dot"] {
        std::fs::copy(fixture(f), dir.join(f)).unwrap();
    }
    let d = dir.to_str().unwrap();
    let (code1, out1, _) = run(&["classify", "--json", "--jobs", "1", d]);
    let (code4, out4, _) = run(&["classify", "--json", "--jobs", "4", d]);
    assert_eq!((code1, code4), (2, 2));
    assert_eq!(out1, out4);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out1).unwrap().as_array().unwrap().len(), 4);
}

#[test]
fn binary_forwards_exit_code() {
    let bin = env!("CARGO_BIN_EXE_racg");
    let ok = Command::new(bin).args(["classify", &fixture("fig_aprime_a1.txt")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("subtype: A.1"));
    let bad = Command::new(bin).args(["classify", &fixture("c4.txt")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
