//! The command line binary: report shape, determinism and exit codes.

use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_emtensor")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}\n{stderr}"));
    (code, v)
}

#[test]
fn laws_pass_with_full_report() {
    let (code, v) = run_json(&["laws", "--monad", "powerset", "--sizes", "2,2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    for key in ["status", "witnesses", "carriers", "tables", "timing", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn tensor_of_d4_has_sixteen_elements() {
    let d4 = fixture("d4.json");
    for alt in [false, true] {
        let mut args = vec!["tensor", "--monad", "powerset", "--A", &d4, "--B", &d4];
        if alt {
            args.push("--alt");
        }
        let (code, v) = run_json(&args);
        assert_eq!(code, 0);
        assert_eq!(v["tables"]["size"], 16);
        assert_eq!(v["carriers"]["tensor"].as_array().unwrap().len(), 16);
        assert_eq!(v["tables"]["universal-bimorphism"].as_object().unwrap().len(), 16);
    }
}

#[test]
fn monadicity_census_roundtrips() {
    let (code, v) = run_json(&["monadicity", "--monoid", &fixture("v3.json"), "--max-algebra", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["tables"]["census"], 29);
}

#[test]
fn bimorphism_count_and_tables() {
    let (code, v) = run_json(&["bimorphisms", "--A", &fixture("c2.json"), "--B", &fixture("c3.json"), "--C", &fixture("d4.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["tables"]["count"], 9);
    assert_eq!(v["tables"]["bimorphisms"].as_array().unwrap().len(), 9);
}

#[test]
fn law_failures_exit_one_with_witnesses() {
    for args in [
        vec!["tensor".to_string(), "--A".into(), fixture("bad-c2.json"), "--B".into(), fixture("c2.json")],
        vec!["monoid-check".into(), "--monoid".into(), fixture("bad-unit-v3.json")],
        vec!["restrict".into(), "--hom".into(), fixture("bad-hom-c2-to-v3.json")],
        vec!["laws".into(), "--monad".into(), "vector_space".into(), "--kappa".into(), "additive".into()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, v) = run_json(&args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(v["status"], "fail");
        let w = v["witnesses"].as_array().unwrap();
        assert!(!w.is_empty() && w[0]["witness"].is_string(), "{args:?}");
    }
}

#[test]
fn parse_errors_exit_two() {
    let (code, v) = run_json(&["tensor", "--A", &fixture("malformed.json"), "--B", &fixture("c2.json")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    let (code, v) = run_json(&["laws", "--monad", "bogus"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "unknown-monad");
    let (code, _, _) = run(&["laws", "--no-such-flag"]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["laws", "--sizes", "2,x,1"]);
    assert_eq!(code, 2);
}

#[test]
fn resource_errors_exit_three() {
    let d4 = fixture("d4.json");
    let (code, v) = run_json(&["tensor", "--A", &d4, "--B", &d4, "--guard", "10"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "resource");
    let (code, _) = run_json(&["bimorphisms", "--A", &d4, "--B", &d4, "--C", &d4, "--budget", "5"]);
    assert_eq!(code, 3);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let d4 = fixture("d4.json");
    for args in [
        vec!["tensor", "--A", d4.as_str(), "--B", d4.as_str()],
        vec!["coherence", "--monad", "vector_space"],
        vec!["action-monad", "--monoid", "V3", "--X", "2"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second, "{args:?}");
    }
}

#[test]
fn json_indent_zero_is_one_line() {
    let (_, stdout, _) = run(&["kleisli-roundtrip", "--monad", "identity", "--json-indent", "0"]);
    assert_eq!(stdout.trim_end().lines().count(), 1);
    let (_, stdout, _) = run(&["kleisli-roundtrip", "--monad", "identity", "--json-indent", "4"]);
    assert!(stdout.lines().nth(1).unwrap().starts_with("    \""));
}
