use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn agt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agt")).args(args).env_remove("AGT_PRIME").output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn classify_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m2.json", r#"{"vars": 2, "gens": [[2,0],[1,1],[0,2]]}"#);
    let out = agt(&["classify", "--ideal", &f]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/classify_m2.json");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn report_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"vars": 2, "gens": [[2,0],[1,1],[0,2]]}"#, 2, "TypeTwo:a→Teter", Some(true)),
        (r#"{"vars": 2, "gens": [[3,0],[1,2],[0,4]]}"#, 2, "NotAlmostGorenstein", Some(false)),
        (r#"{"vars": 2, "components": [[2,2]]}"#, 1, "Gorenstein", Some(true)),
    ];
    for (i, (text, t, case, c1)) in cases.iter().enumerate() {
        let f = write(dir.path(), &format!("{i}.json"), text);
        let report_path = dir.path().join(format!("{i}.out.json"));
        let out = agt(&["classify", "--ideal", &f, "--report", report_path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
        assert_eq!(v["type"], *t);
        assert_eq!(v["case"], *case);
        assert_eq!(v["conditions"]["c1"].as_bool(), *c1);
        for key in ["duality", "trace_containment", "colon_sum_is_m", "colon_outside_m2", "component_condition", "variable_colon"] {
            assert!(v["checks"].get(key).is_some(), "{key}");
        }
        for key in ["status", "dim", "verified"] {
            assert!(v["cover"].get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn malformed_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", "{\"vars\": 2,\n \"gens\": [[2,0], [0,2],\n [1]]}");
    let out = agt(&["classify", "--ideal", &f]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("field `gens[2]`"), "{err}");
    let f = write(dir.path(), "syntax.json", "{\"vars\": 2,\n \"gens\": [[2,0],, [0,2]]}");
    let err = String::from_utf8(agt(&["hilbert", "--ideal", &f]).stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let out = agt(&["hilbert", "--ideal", &f, "--prime", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn prime_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m2.json", r#"{"vars": 2, "gens": [[2,0],[1,1],[0,2]]}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_agt")).args(["cover", "--ideal", &f]).env("AGT_PRIME", "7").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "found");
    assert_eq!(v["verification"]["verified"], true);
    let bad = Command::new(env!("CARGO_BIN_EXE_agt")).args(["cover", "--ideal", &f]).env("AGT_PRIME", "9").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn check_selected_conditions() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "t.json", r#"{"vars": 2, "components": [[1,3],[2,2]]}"#);
    let v = json(&agt(&["check", "--ideal", &f, "--conditions", "2", "--cap", "1000"]));
    assert!(v["conditions"]["c1"].is_null());
    assert_eq!(v["conditions"]["c2"]["holds"], true);
    assert_eq!(v["conditions"]["c2"]["mode"], "exhaustive");
    let capped = agt(&["check", "--ideal", &f, "--conditions", "1,2", "--cap", "2"]);
    assert_eq!(json(&capped)["conditions"]["c2"]["mode"], "sampled");
    assert_eq!(agt(&["check", "--ideal", &f, "--conditions", "3"]).status.code(), Some(1));
}

#[test]
fn corpus_batch_and_hunt() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    let c = corpus.to_str().unwrap();
    let out = agt(&["corpus", "--vars", "2", "--max-exp", "3", "--type", "2", "--count", "6", "--seed", "4", "--out", c]);
    assert_eq!(out.status.code(), Some(0));
    let ideals: Value = serde_json::from_str(&std::fs::read_to_string(&corpus).unwrap()).unwrap();
    assert_eq!(ideals.as_array().unwrap().len(), 6);

    let a = agt(&["batch", "--input", c, "--seed", "9"]);
    let b = agt(&["batch", "--input", c, "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["summary"]["count"], 6);
    assert_eq!(v["summary"]["discrepancies"], 0);

    let cand = dir.path().join("cand.json");
    let h = agt(&["hunt", "--vars", "3", "--max-exp", "3", "--type", "3", "--count", "8", "--candidates", cand.to_str().unwrap()]);
    assert_eq!(h.status.code(), Some(0));
    assert!(json(&h).as_array().unwrap().iter().all(|r| r["verdict"] == "consistent"));
    assert_eq!(std::fs::read_to_string(&cand).unwrap().trim(), "[]");

    let infeasible = agt(&["corpus", "--vars", "2", "--max-exp", "4", "--type", "2", "--count", "50"]);
    assert_eq!(infeasible.status.code(), Some(1));
}

#[test]
fn cover_negative_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", r#"{"vars": 2, "gens": [[2,0],[0,2]]}"#);
    let v = json(&agt(&["cover", "--ideal", &g]));
    assert_eq!((v["status"].as_str(), v["embedding_dim"].as_u64(), v["generators"].as_u64()), (Some("obstructed"), Some(2), Some(1)));
}
