use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn pbp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbp")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> String {
    let path = dir.path().join(name);
    fs::write(&path, v.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn bs_verdicts_and_witness() {
    let o = pbp(&["bs", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["answer"], "NO");

    let o = pbp(&["bs", "2", "-2", "--witness", "--verify-bound", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"]["answer"], "YES");
    assert_eq!(v["witness_report"]["index"], 4);

    assert_eq!(pbp(&["bs", "0", "2"]).status.code(), Some(2));
    assert_eq!(pbp(&["bs", "2", "3", "--witness"]).status.code(), Some(2));
}

#[test]
fn classify_descriptors() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "d.json", &json!({"kind": "flagged", "flags": {"centre": "infinite"}}));
    let o = pbp(&["classify", "-i", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["answer"], "YES");

    let f = write(&dir, "u.json", &json!({"kind": "flagged", "flags": {"infinite": true}}));
    let o = pbp(&["classify", "-i", &f, "--explain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("no applicable rule"));

    let f = write(&dir, "bad.json", &json!({"kind": "flagged", "flags": {"simple": true, "centre": "infinite"}}));
    let o = pbp(&["classify", "-i", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("simple"));

    assert_eq!(pbp(&["classify", "-i", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn coxeter_and_lie() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "m.json", &json!({"m": [[1, 3, 3], [3, 1, 7], [3, 7, 1]]}));
    let o = pbp(&["coxeter", "-i", &f, "--explain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("coxeter.indefinite"));
    let j = stdout_json(&pbp(&["coxeter", "-i", &f]));
    assert_eq!((j["verdict"]["answer"].as_str(), j["components"][0]["label"].as_str()), (Some("NO"), Some("Indefinite")));

    let o = pbp(&["lie", "-i", "heisenberg"]);
    assert_eq!(stdout_json(&o)["answer"], "YES");
    assert_eq!(stdout_json(&pbp(&["lie", "--catalogue", "sl2 + sl2"]))["answer"], "YES");
    assert_eq!(pbp(&["lie"]).status.code(), Some(2));
    let o = pbp(&["lie", "-i", "sol"]);
    assert_eq!(stdout_json(&o)["answer"], "NO");
    assert_eq!(pbp(&["lie", "-i", "so(1,0)"]).status.code(), Some(2));

    let alg = json!({"dim": 2, "basis": ["e", "f"], "brackets": [{"x": "f", "y": "e", "value": {"e": "1"}}]});
    let f = write(&dir, "af.json", &alg);
    assert_eq!(stdout_json(&pbp(&["lie", "-i", &f]))["answer"], "NO");
}

#[test]
fn subgroup_of_bs22() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", &json!({"generators": ["s", "t"], "relators": ["t s^2 t^-1 s^-2"]}));
    let h = write(&dir, "h.json", &json!({"images": {"s": [1, 0, 2, 3], "t": [0, 1, 3, 2]}}));
    let o = pbp(&["subgroup", "-i", &p, "--hom", &h]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["index"], 4);
    assert_eq!(v["expected_counts"], json!([5, 4]));
    assert_eq!(v["abelianization"]["free_rank"], 4);

    let bad = write(&dir, "b.json", &json!({"images": {"s": [1, 0], "t": [0, 0]}}));
    assert_eq!(pbp(&["subgroup", "-i", &p, "--hom", &bad]).status.code(), Some(2));
}

#[test]
fn abels_check() {
    let o = pbp(&["abels", "--prime", "5", "--trials", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!((v["symbolic"].as_str(), v["randomized"].as_str()), (Some("pass"), Some("pass")));
    assert_eq!(pbp(&["abels", "--prime", "4"]).status.code(), Some(2));
}
