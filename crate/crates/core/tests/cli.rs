//! End-to-end runs of the `hk` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hk")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn data(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn catalog_lists_entries() {
    let o = hk(&["catalog"]);
    assert_eq!(code(&o), 0);
    let all = json(&o);
    let names: Vec<&str> = all
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"krasner"));
    assert_eq!(json(&hk(&["catalog", ""])), all);

    let v = json(&hk(&["catalog", "viro"]));
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["negative_fixture"], true);
}

#[test]
fn verify_exit_codes() {
    let o = hk(&["verify", "krasner"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["structure"], "krasner");
    // the negative fixture matches its expected failures
    assert_eq!(code(&hk(&["verify", "viro-multigroup"])), 0);
    assert_eq!(code(&hk(&["verify", "no-such-entry"])), 2);
    assert_eq!(code(&hk(&["verify", "krasner", "--suite", "bogus"])), 2);
    assert_eq!(code(&hk(&["verify"])), 2);
}

#[test]
fn verify_reports_validation_errors_as_usage() {
    let o = hk(&["verify", &data("hsf/bad-negation.json")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("neg-involution"));
}

#[test]
fn closure_cap_is_a_resource_error() {
    let d = scratch("cap");
    let f = d.join("f11.json");
    let f = f.to_str().unwrap();
    assert_eq!(
        code(&hk(&["construct", "quotient", "--p", "11", "--g", "1,10", "--out", f])),
        0
    );
    let o = Command::new(env!("CARGO_BIN_EXE_hk"))
        .args(["bridge", "to-system", f])
        .env("HK_CLOSURE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn constructed_structure_round_trips() {
    let d = scratch("roundtrip");
    let f = d.join("f3.json");
    let f = f.to_str().unwrap();
    assert_eq!(
        code(&hk(&["construct", "quotient", "--p", "3", "--g", "1,2", "--out", f])),
        0
    );
    let o = hk(&["verify", f, "--suite", "axioms"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn pipelines() {
    for name in ["f11-profile", "krasner-roundtrip", "empty"] {
        let d = scratch(name);
        let file = data(&format!("pipelines/{name}.json"));
        let run = || hk(&["pipeline", &file, "--workdir", d.to_str().unwrap()]);
        let first = run();
        assert_eq!(code(&first), 0, "{name}: {}", String::from_utf8_lossy(&first.stderr));
        assert_eq!(first.stdout, run().stdout, "{name} is not deterministic");
    }
}
