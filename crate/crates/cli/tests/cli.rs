use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treeflip"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("bad report {e}: {}", String::from_utf8_lossy(&o.stdout))
    })
}

const CHORDED_C4: &str = r#"{"n": 4, "edges": [[0,1],[1,2],[2,3],[0,3],[0,2]],
    "source_tree": [[0,1],[0,2],[0,3]], "target_tree": [[1,2],[0,2],[2,3]],
    "constraint": {"kind": "at_least", "leaves": 3}}"#;

// K_{3,3} with sides {0,1,2} and {3,4,5}; double stars, budget of three
const K33: &str = r#"{"n": 6, "edges": [[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]],
    "source_tree": [[0,3],[0,4],[0,5],[3,1],[3,2]], "target_tree": [[1,4],[1,3],[1,5],[4,0],[4,2]],
    "constraint": {"kind": "at_least", "leaves": 3}}"#;

const C5: &str = r#"{"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[0,4]],
    "source_tree": [[0,1],[1,2],[2,3],[3,4]], "target_tree": [[1,2],[2,3],[3,4],[0,4]],
    "constraint": {"kind": "at_least", "leaves": 2}}"#;

#[test]
fn solve_cograph_yes() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "k33.json", K33);
    let o = run(&["solve", "--input", s(&f), "--witness", "--check-oracle"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&o);
    assert_eq!(r["decision"], "yes");
    assert_eq!(r["details"]["class"], "cograph");
    assert_eq!(r["oracle_agrees"], true);
    assert!(r["witness"]["flips"].is_array());
}

#[test]
fn solve_chorded_c4_no() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "c4.json", CHORDED_C4);
    let o = run(&["solve", "--input", s(&f), "--check-oracle"]);
    assert_eq!(code(&o), 1);
    assert_eq!(report(&o)["oracle_agrees"], true);
}

#[test]
fn malformed_input_is_an_error() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "bad.json", "{\"n\": 3, \"edges\": [[0,");
    let o = run(&["solve", "--input", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(report(&o)["error"].as_str().unwrap().contains("malformed"));
    assert_eq!(code(&run(&["solve"])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
}

#[test]
fn unsupported_class_is_an_error() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "c5.json", C5);
    let o = run(&["solve", "--input", s(&f)]);
    assert_eq!(code(&o), 2);
    assert!(report(&o)["error"].as_str().unwrap().contains("unsupported class"));
}

#[test]
fn oracle_decisions_and_budget() {
    let d = TempDir::new().unwrap();
    let c4 = write(&d, "c4.json", CHORDED_C4);
    assert_eq!(code(&run(&["oracle", "--input", s(&c4)])), 1);
    let c5 = write(&d, "c5.json", C5);
    let o = run(&["oracle", "--input", s(&c5), "--witness"]);
    assert_eq!(code(&o), 0);
    assert_eq!(report(&o)["witness"]["flips"].as_array().unwrap().len(), 1);
    let k33 = write(&d, "k33.json", K33);
    let o = run(&["oracle", "--input", s(&k33), "--budget-states", "2"]);
    assert_eq!(code(&o), 3);
    assert_eq!(report(&o)["decision"], "budget exceeded");
}

#[test]
fn census_shows_frozen_stars() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "c4.json", CHORDED_C4);
    let o = run(&["oracle", "--census", "--input", s(&f)]);
    assert_eq!(code(&o), 0);
    let comps = report(&o)["details"]["components"].as_array().unwrap().clone();
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c["size"] == 1 && c["frozen"] == true));
}

#[test]
fn gen_is_seeded_and_valid() {
    let d = TempDir::new().unwrap();
    for kind in ["interval", "cograph", "connected", "planar-embedded"] {
        let a = d.path().join(format!("{kind}-a.json"));
        let b = d.path().join(format!("{kind}-b.json"));
        assert_eq!(code(&run(&["gen", kind, "8", "--seed", "1", "--output", s(&a)])), 0);
        assert_eq!(code(&run(&["gen", kind, "8", "--seed", "1", "--output", s(&b)])), 0);
        let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        assert_eq!(ta, tb, "{kind}");
        let v: Value = serde_json::from_slice(&ta).unwrap();
        match kind {
            "interval" => assert_eq!(v["interval"].as_array().unwrap().len(), 8),
            "planar-embedded" => assert!(v["faces"].is_object()),
            _ => assert_eq!(v["n"], 8),
        }
    }
    let o = run(&["gen", "connected", "1"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 1);
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);
    assert_eq!(code(&run(&["gen", "connected", "0"])), 2);
}

#[test]
fn reductions_emit_roles_and_trees() {
    let d = TempDir::new().unwrap();
    let p3 = write(&d, "p3.json", r#"{"n": 3, "edges": [[0,1],[1,2]]}"#);
    let out = d.path().join("vc.json");
    let o = run(&["reduce", "vc2st", "--input", s(&p3), "--output", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["n"], 28);
    assert_eq!(v["roles"]["gadgets"].as_object().unwrap().len(), 2);
    assert_eq!(v["roles"]["Z"].as_array().unwrap().len(), 2);
    assert_eq!(v["constraint"]["kind"], "at_most");
    assert_eq!(report(&o)["artifact"], s(&out));

    let tri = write(
        &d,
        "tri.json",
        r#"{"n": 3, "edges": [[0,1],[1,2],[0,2]], "faces": {"outer": 0, "cycles": [[0,1,2],[0,2,1]]}}"#,
    );
    for kind in ["ds2st-bip", "ds2st-split"] {
        let o = run(&["reduce", kind, "--input", s(&tri), "--from", "0", "--to", "2"]);
        assert_eq!(code(&o), 0);
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["n"], 11);
        assert_eq!(v["roles"]["x"], 9);
        // round trip through the oracle: {0} and {2} are token-reachable
        let f = write(&d, &format!("{kind}.json"), &String::from_utf8_lossy(&o.stdout));
        assert_eq!(code(&run(&["oracle", "--input", s(&f)])), 0);
    }
    let o = run(&["reduce", "vc2st-planar", "--input", s(&tri)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["roles"]["face_vertices"].as_object().unwrap().len(), 2);
    // 2(|E| + 1) - tau = 8 - 2
    assert_eq!(v["constraint"]["leaves"], 6);

    let o = run(&["reduce", "vc2st", "--input", s(&p3), "--from", "0"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn crosscheck_two_internal_agrees() {
    let d = TempDir::new().unwrap();
    let csv = d.path().join("cases.csv");
    let o = run(&["crosscheck", "--suite", "two-internal", "--count", "200", "--seed", "7", "--csv", s(&csv)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let r = report(&o);
    assert_eq!(r["details"]["disagree"], 0);
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count();
    assert_eq!(rows as u64, r["details"]["cases"].as_u64().unwrap() + 1);
}

#[test]
fn crosscheck_catches_injected_bugs() {
    let d = TempDir::new().unwrap();
    let csv = d.path().join("cases.csv");
    for (suite, mutation) in [
        ("cograph", "negate-decision"),
        ("two-internal", "negate-decision"),
        ("reductions", "negate-decision"),
        ("interval", "truncate-witness"),
        ("reductions", "truncate-witness"),
    ] {
        let o = run(&["crosscheck", "--suite", suite, "--count", "30", "--mutation", mutation, "--csv", s(&csv)]);
        assert_eq!(code(&o), 1, "{suite} {mutation}");
        assert!(report(&o)["details"]["disagree"].as_u64().unwrap() > 0);
    }
}

#[test]
fn crosscheck_zero_count_warns() {
    let d = TempDir::new().unwrap();
    let csv = d.path().join("cases.csv");
    let o = run(&["crosscheck", "--suite", "all", "--count", "0", "--csv", s(&csv)]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 cases"));
}

#[test]
fn text_format() {
    let d = TempDir::new().unwrap();
    let f = write(&d, "c4.json", CHORDED_C4);
    let o = run(&["solve", "--input", s(&f), "--format", "text"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("decision: no"));
}
