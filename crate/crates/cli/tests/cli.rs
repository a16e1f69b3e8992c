//! End-to-end runs of the `cluster-cone` binary.

use std::process::{Command, Output};

use cluster_cone::exact::IntVec;
use cluster_cone::Cone;
use num_bigint::BigInt;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-cone"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn matrix(value: &Value) -> Vec<IntVec> {
    value
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            row.as_array()
                .unwrap()
                .iter()
                .map(|x| BigInt::from(x.as_i64().unwrap()))
                .collect()
        })
        .collect()
}

#[test]
fn a1_cone_json() {
    let out = run(&["cone", "--family", "A", "--rank", "1", "--frozen", "special", "--format", "json"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["family"], "A");
    assert_eq!(doc["frozen_mode"], "special");
    let vars = doc["variables"].as_array().unwrap();
    assert_eq!(vars.len(), 6);
    let kinds: Vec<&str> = vars.iter().map(|v| v["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["cluster", "cluster", "frozen", "frozen", "frozen", "frozen"]);

    let inequalities = matrix(&doc["inequalities"]);
    let expected: Vec<Vec<i64>> = vec![vec![1, 1, -1, 0, -1, 0], vec![1, 1, 0, -1, 0, -1]];
    let as_i64: Vec<Vec<i64>> = doc["inequalities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
        .collect();
    assert_eq!(as_i64, expected);
    assert_eq!(doc["lineality"].as_array().unwrap().len(), 4);
    assert_eq!(doc["rays"].as_array().unwrap().len(), 2);

    // The printed generators and inequalities describe the same cone.
    let from_generators =
        Cone::from_generators(6, &matrix(&doc["rays"]), &matrix(&doc["lineality"])).unwrap();
    let from_inequalities =
        Cone::from_inequalities(6, &inequalities, &matrix(&doc["equations"])).unwrap();
    assert_eq!(from_generators, from_inequalities);
}

#[test]
fn text_output_lists_coordinates() {
    let out = run(&["cone", "-f", "A", "-r", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("coordinates: [1,3] [2,4] [1,2] [2,3] [3,4] [1,4]"));
    assert!(text.contains("rays (2)"));
}

#[test]
fn g2_equality_passes() {
    let out = run(&["verify", "--check", "equality", "--family", "G", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("PASS equality"));
}

#[test]
fn d4_without_frozen_passes_all() {
    let out = run(&["verify", "--family", "D", "--rank", "4", "--frozen", "none", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    let statuses: Vec<&str> = doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap())
        .collect();
    assert!(statuses.iter().all(|s| *s != "fail"));
    assert!(statuses.iter().filter(|s| **s == "pass").count() >= 7);
}

#[test]
fn invalid_configurations_exit_2() {
    for args in [
        &["cone", "-f", "G", "-r", "2", "--model", "polygon"][..],
        &["cone", "-f", "E", "-r", "6", "--frozen", "special"],
        &["cone", "-f", "A", "-r", "0"],
        &["cone", "-f", "A", "-r", "3", "--order", "1,2,3"],
        &["verify", "-f", "E", "-r", "7"],
        &["verify", "-f", "A", "-r", "2", "--check", "rays", "--model", "root"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("cluster-cone-{}.json", std::process::id()));
    let out = run(&["variables", "-f", "B", "-r", "2", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(doc["variables"].as_array().unwrap().len(), 6 + 3);
}
