mod common;

use serde_json::Value;

#[test]
fn golden_invocations() {
    let failures: Vec<String> = common::GOLDENS
        .iter()
        .filter_map(|g| common::check_golden(g).err())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

fn json_doc(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout, _) = common::invoke(&full);
    let doc = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{stdout:?}: {e}"));
    (code, doc)
}

#[test]
fn json_documents_have_stable_shape() {
    let (code, doc) = json_doc(&["classify", "161/36", "--base", "6"]);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "classify");
    assert_eq!(doc["inputs"]["value"]["num"], "161");
    assert_eq!(doc["inputs"]["value"]["den"], "36");
    assert_eq!(doc["result"]["kind"], "terminating");
    assert_eq!(doc["result"]["rho0"], 2);
    assert!(doc.get("pass").is_none());

    let (code, doc) = json_doc(&["repr", "9/7", "--base", "10"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["repetend"], serde_json::json!([2, 8, 5, 7, 1, 4]));
    assert_eq!(doc["result"]["int_digits"], serde_json::json!([1]));

    let (_, doc) = json_doc(&["orbits", "--modulus", "9"]);
    assert_eq!(doc["result"]["classes"][1]["divisor"], 3);
    assert_eq!(doc["result"]["classes"][1]["residues"], serde_json::json!([3, 6]));
}

#[test]
fn json_and_text_verdicts_match() {
    let cases: &[&[&str]] = &[
        &["verify", "main1", "--q", "21", "--r", "2", "--base", "8", "--terms", "5"],
        &["verify", "main2", "--n", "21", "--s", "25", "--base", "8"],
        &["verify", "cor1", "--q", "9", "--r", "5", "--base", "10"],
        &["verify", "lemma31", "--q", "1441/20", "--base", "10"],
        &["fuzz", "main2", "--bases", "2..6", "--n-bound", "10", "--s-bound", "10", "--workers", "2"],
    ];
    for args in cases {
        let (text_code, text, _) = common::invoke(args);
        let (json_code, doc) = json_doc(args);
        assert_eq!(text_code, json_code, "{args:?}");
        assert_eq!(text_code, 0, "{args:?}");
        assert_eq!(doc["pass"], Value::Bool(true), "{args:?}");
        assert!(text.contains("PASS") || text.contains("failed=0"), "{args:?}: {text}");
    }
}

#[test]
fn main2_outside_hypothesis_is_a_precondition_error() {
    let (code, stdout, _) = common::invoke(&["verify", "main2", "--n", "1", "--s", "3", "--base", "10"]);
    assert_eq!(code, 2);
    assert!(stdout.contains("hypothesis not met"));
    let (code, _, _) = common::invoke(&["verify", "main2", "--n", "2", "--s", "4", "--base", "10"]);
    assert_eq!(code, 2);
}

#[test]
fn workers_env_is_validated() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_radixroot"))
        .args(["fuzz", "main1", "--bases", "2..4", "--bound", "5"])
        .env("RADIXROOT_WORKERS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_radixroot"))
        .args(["--json", "fuzz", "main1", "--bases", "2..6", "--bound", "5"])
        .env("RADIXROOT_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["inputs"]["workers"], 3);
}

#[test]
fn large_base_literals() {
    let (code, stdout, _) = common::invoke(&["convert", "[1,30.0,39(7)]_40", "--to", "40"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[1,30.0,39(7)]_40\n");
}
