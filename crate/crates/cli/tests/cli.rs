use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn mrkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mrkit"))
        .args(args)
        .env_remove("MRKIT_MAX_CARRIER")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut all = vec!["build"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", &path]);
    let out = mrkit(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

#[test]
fn build_sizes() {
    for (args, n) in [
        (vec!["build", "--kind", "face", "--n", "2"], 2u32),
        (vec!["build", "--kind", "interval", "--atoms", "3"], 3),
    ] {
        let out = mrkit(&args);
        assert!(out.status.success());
        assert_eq!(json_of(&out)["carrier"], 3u64.pow(n));
    }
    let out = mrkit(&["build", "--kind", "pairs", "--base", "I3"]);
    let v = json_of(&out);
    assert_eq!(v["carrier"], 5);
    let labels: Vec<&str> = v["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap())
        .collect();
    for l in ["⟨1,1⟩", "⟨1,a⟩", "⟨a,1⟩", "⟨1,b⟩", "⟨b,1⟩"] {
        assert!(labels.contains(&l), "{labels:?}");
    }
}

#[test]
fn build_is_deterministic() {
    let a = mrkit(&["build", "--kind", "filter", "--n", "3"]);
    let b = mrkit(&["build", "--kind", "filter", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_reports() {
    let dir = TempDir::new().unwrap();
    let c2 = build(dir.path(), "c2.json", &["--kind", "interval", "--n", "2"]);
    let out = mrkit(&["check", "-i", &c2, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["cubic"]["passed"], true);
    assert_eq!(v["mr"]["passed"], true);
    assert_eq!(v["caret_total"], true);

    let n5 = build(dir.path(), "n5.json", &["--kind", "pairs", "--base", "I3"]);
    let out = mrkit(&["check", "-i", &n5, "--format", "json", "--witness", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["cubic"]["passed"], true);
    assert_eq!(v["mr"]["passed"], false);
    assert_eq!(v["caret_total"], false);
    let has_pair = v["mr"]["violations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w["labels"] == serde_json::json!(["⟨1,1⟩", "⟨1,a⟩", "⟨1,b⟩"]));
    assert!(has_pair);
}

#[test]
fn corrupted_input_is_a_schema_error() {
    let dir = TempDir::new().unwrap();
    let c2 = build(dir.path(), "c2.json", &["--kind", "interval", "--n", "2"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&c2).unwrap()).unwrap();
    v["join"] = serde_json::json!([[0]]);
    std::fs::write(&c2, v.to_string()).unwrap();
    assert_eq!(mrkit(&["check", "-i", &c2]).status.code(), Some(2));
    std::fs::write(&c2, "not json").unwrap();
    assert_eq!(mrkit(&["check", "-i", &c2]).status.code(), Some(2));
}

#[test]
fn broken_axioms_exit_one() {
    let dir = TempDir::new().unwrap();
    let c1 = build(dir.path(), "c1.json", &["--kind", "interval", "--n", "1"]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&c1).unwrap()).unwrap();
    // Make Δ(1, x) = x for every x.
    let one = v["one"].as_u64().unwrap() as usize;
    for x in 0..3 {
        v["delta"][one][x] = x.into();
    }
    std::fs::write(&c1, v.to_string()).unwrap();
    let out = mrkit(&["check", "-i", &c1]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("cubic: fail"));
}

#[test]
fn automorphism_counts() {
    let dir = TempDir::new().unwrap();
    for n in 0..=3usize {
        let path = build(
            dir.path(),
            &format!("c{n}.json"),
            &["--kind", "interval", "--n", &n.to_string()],
        );
        let v = json_of(&mrkit(&["aut", "-i", &path, "--format", "json"]));
        let expect = (1..=n).product::<usize>() << n;
        assert_eq!(v["order"], expect);
        assert_eq!(v["inner_order"], 1usize << n);
        assert_eq!(v["omega"].as_array().unwrap().len(), 1 << n);
    }
}

#[test]
fn verify_claims() {
    let dir = TempDir::new().unwrap();
    let c2 = build(dir.path(), "c2.json", &["--kind", "interval", "--n", "2"]);
    let out = mrkit(&[
        "verify",
        "-i",
        &c2,
        "--claims",
        "lem:fixed",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v[0]["claim_id"], "lem:fixed");
    assert_eq!(v[0]["status"], "pass");

    assert_eq!(
        mrkit(&["verify", "--corpus", "--claims", "lem:nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(mrkit(&["verify"]).status.code(), Some(2));
}

#[test]
fn corpus_report_is_reproducible() {
    let args = ["verify", "--corpus", "--seed", "42", "--format", "json"];
    let a = mrkit(&args);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    let v = json_of(&a);
    assert!(v.as_array().unwrap().iter().all(|o| o["status"] != "fail"));
    assert_eq!(a.stdout, mrkit(&args).stdout);
}

#[test]
fn carrier_cap() {
    let out = mrkit(&[
        "build",
        "--kind",
        "interval",
        "--n",
        "3",
        "--max-carrier",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_mrkit"))
        .args(["build", "--kind", "interval", "--n", "3"])
        .env("MRKIT_MAX_CARRIER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
