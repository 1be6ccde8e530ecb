//! The `globact` binary run on the bundled fixture documents.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn globact(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_globact"))
        .args(args)
        .env_remove("GLOBACT_BOUND")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = globact(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn compare_nsub() {
    let r = report(&["compare", &path("nsub.json")]);
    assert_eq!(r["command"], "compare");
    let result = &r["result"];
    assert_eq!(result["tensor_size"], 4);
    assert_eq!(result["hom_size"], 3);
    assert_eq!(result["canonical_injective"], false);
    assert_eq!(result["canonical_surjective"], true);
    assert_eq!(result["isomorphic"], false);
}

#[test]
fn compare_z2() {
    let result = &report(&["compare", &path("z2.json")])["result"];
    assert_eq!(result["tensor_size"], 2);
    assert_eq!(result["hom_size"], 2);
    assert_eq!(result["isomorphic"], true);
}

#[test]
fn census_nsub() {
    let result = &report(&["census", &path("nsub.json")])["result"];
    assert_eq!(result["count"], 2);
    let objects = result["objects"].as_array().unwrap();
    let initial = result["initial_index"].as_u64().unwrap() as usize;
    let terminal = result["terminal_index"].as_u64().unwrap() as usize;
    assert_eq!(objects[initial]["size"], 4);
    assert_eq!(objects[terminal]["size"], 3);
    assert_eq!(objects[initial]["initial"], true);
    let matrix = result["morphisms"].as_array().unwrap();
    assert!(!matrix[initial][terminal].is_null());
    assert!(matrix[terminal][initial].is_null());
}

#[test]
fn reports_are_deterministic() {
    for command in ["props", "tensor", "hom", "census", "compare", "adjoin"] {
        let first = globact(&[command, &path("nsub.json")]);
        let second = globact(&[command, &path("nsub.json")]);
        assert_eq!(first.status.code(), Some(0), "{command}");
        assert_eq!(first.stdout, second.stdout, "{command}");
    }
}

#[test]
fn envelope_hashes_input() {
    let r = report(&["validate", &path("sl2.json")]);
    let bytes = std::fs::read(fixture("sl2.json")).unwrap();
    assert_eq!(r["input_sha256"], globact::io::content_hash(&bytes));
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["result"]["valid"], true);
}

#[test]
fn props_flags() {
    let result = &report(&["props", &path("not-firm.json")])["result"];
    assert_eq!(result["firm"], false);
    assert_eq!(result["unitary"], true);
    assert_eq!(result["condition_f"], false);
    let result = &report(&["props", &path("singular.json")])["result"];
    assert_eq!(result["nonsingular"], false);
    let result = &report(&["props", &path("sl2.json")])["result"];
    assert_eq!(result["firm"], true);
    assert_eq!(result["monoid"], true);
}

#[test]
fn invalid_input_exits_1() {
    let out = globact(&["validate", &path("sl2-pa-violation.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(globact(&["props", "/nonexistent/act.json"]).status.code(), Some(1));
    assert_eq!(globact(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn precondition_exits_2() {
    assert_eq!(globact(&["census", &path("not-firm.json")]).status.code(), Some(2));
    assert_eq!(globact(&["census", &path("singular.json")]).status.code(), Some(2));
    assert_eq!(globact(&["onepoint", &path("z2.json")]).status.code(), Some(2));
}

#[test]
fn bound_exits_3() {
    let out = globact(&["--bound", "1", "census", &path("nsub.json")]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_globact"))
        .args(["census", &path("nsub.json")])
        .env("GLOBACT_BOUND", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quiet_and_out() {
    let dir = std::env::temp_dir().join(format!("globact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("report.json");
    let out = globact(&[
        "--quiet",
        "--out",
        target.to_str().unwrap(),
        "tensor",
        &path("sl2.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["result"]["size"], 3);
    assert_eq!(report(&["tensor", &path("sl2.json")]), written);
    let quiet_failure = globact(&["--quiet", "census", &path("not-firm.json")]);
    assert_eq!(quiet_failure.status.code(), Some(2));
    assert!(quiet_failure.stderr.is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_onepoint_of_nsub() {
    let r = report(&["verify", &path("nsub.json"), &path("nsub-onepoint.glob.json")]);
    let bytes = std::fs::read(fixture("nsub-onepoint.glob.json")).unwrap();
    assert_eq!(r["glob_sha256"], globact::io::content_hash(&bytes));
    let result = &r["result"];
    assert_eq!(result["certificates"]["g1"], true);
    assert_eq!(result["certificates"]["g2"], true);
    assert_eq!(result["certificates"]["a_generated"], true);
    assert_eq!(result["from_tensor"]["map"].as_array().unwrap().len(), 4);
    assert_eq!(result["to_hom"]["map"].as_array().unwrap().len(), 3);
    assert_eq!(result["compatible_morphisms_from_tensor"], 1);
    assert_eq!(result["triangle"], true);
}

#[test]
fn verify_z2_regular() {
    let result = &report(&["verify", &path("z2.json"), &path("z2-regular.glob.json")])["result"];
    assert_eq!(result["is_globalization"], true);
    assert_eq!(result["certificates"]["a_generated"], true);
    assert_eq!(result["triangle"], true);
}

#[test]
fn verify_accepts_tensor_report() {
    let dir = std::env::temp_dir().join(format!("globact-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let tensor = dir.join("tensor.json");
    let out = globact(&["--out", tensor.to_str().unwrap(), "tensor", &path("sl2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&tensor).unwrap();
    let report: Value = serde_json::from_str(&text).unwrap();
    let glob = dir.join("glob.json");
    std::fs::write(&glob, serde_json::to_string(&report["result"]).unwrap()).unwrap();
    let result = &self::report(&["verify", &path("sl2.json"), glob.to_str().unwrap()])["result"];
    assert_eq!(result["certificates"]["a_generated"], true);
    assert_eq!(result["from_tensor"]["map"], serde_json::json!([0, 1, 2]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn onepoint_nsub() {
    let result = &report(&["onepoint", &path("nsub.json")])["result"];
    assert_eq!(result["size"], 3);
    assert_eq!(result["isom1"]["holds"], true);
}

#[test]
fn adjoin_sl2() {
    let result = &report(&["adjoin", &path("sl2.json")])["result"];
    assert_eq!(result["tensor"]["injective"], true);
    assert_eq!(result["tensor"]["surjective"], true);
    assert_eq!(result["hom"]["isomorphism"], true);
}
