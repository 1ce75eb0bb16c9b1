//! The command-line front end, driven in-process.

use serde_json::Value;
use springer_kit::cli::{run, CSV_HEADER, EXIT_INPUT, EXIT_OK};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("springer-kit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

fn validator() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn json_ok(args: &[&str]) -> Value {
    let v: Value = serde_json::from_str(&ok(args)).unwrap();
    let errors: Vec<String> = validator().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates the schema: {errors:?}");
    v
}

#[test]
fn map_examples() {
    let v = json_ok(&["map", "--N", "7", "--lambda", "3,3,1", "--eps", "+++", "--json"]);
    assert_eq!((v["defect"].as_i64(), v["alpha"].as_str(), v["beta"].as_str()), (Some(1), Some("1"), Some("2")));
    let v = json_ok(&["map", "--N", "1", "--lambda", "1", "--eps", "+", "--json"]);
    assert_eq!((v["defect"].as_i64(), v["alpha"].as_str(), v["beta"].as_str()), (Some(1), Some(""), Some("")));
    let v = json_ok(&["map", "--N", "9", "--lambda", "4,4,1", "--eps", "+", "--json"]);
    assert_eq!(v["h_condition"], Value::Bool(false));
    assert!(v["order"].is_null());
}

#[test]
fn map_rejects_invalid_input() {
    let (code, _, err) = invoke(&["map", "--lambda", "3,2", "--eps", "+"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("not orthogonal"), "{err}");
    let (code, _, err) = invoke(&["map", "--lambda", "3,1", "--eps", "+++"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("sign"), "{err}");
    let (code, _, _) = invoke(&["map", "--N", "5", "--lambda", "3,1", "--eps", "++"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn unmap_inverts_map() {
    assert_eq!(ok(&["unmap", "--N", "7", "--alpha", "1", "--beta", "2", "--k", "1"]).trim(), "3,3,1 / ++");
    json_ok(&["unmap", "--N", "7", "--alpha", "1", "--beta", "2", "--k", "1", "--json"]);
    let (code, _, _) = invoke(&["unmap", "--N", "8", "--alpha", "1", "--beta", "2", "--k", "1"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn max_and_min_examples() {
    assert_eq!(ok(&["max", "--lambda", "3,3,1", "--eps", "+++", "--method", "both"]).trim(), "7 / +");
    assert_eq!(ok(&["max", "--lambda", "1", "--eps", "+"]).trim(), "1 / +");
    assert_eq!(ok(&["min", "--lambda", "3,3,1", "--eps", "+++"]).trim(), "1,1,1,1,1,1,1 / +");
    let v = json_ok(&[
        "max",
        "--lambda",
        "19,17,15,13,11,9,7",
        "--eps",
        "-++-+-+",
        "--method",
        "algorithm",
        "--trace",
        "--json",
    ]);
    assert_eq!(v["result"]["lambda"], "25,23,15,13,11,3,1");
    assert!(!v["trace"].as_array().unwrap().is_empty());
    json_ok(&["min", "--lambda", "5,3", "--eps", "++", "--json"]);
}

#[test]
fn max_even_needs_flag() {
    let (code, _, _) = invoke(&["max", "--lambda", "3,2,2", "--eps", "+"]);
    assert_eq!(code, EXIT_INPUT);
    assert_eq!(ok(&["max", "--lambda", "3,2,2", "--eps", "+", "--allow-even"]).trim(), "7 / +");
    assert_eq!(ok(&["min", "--lambda", "3,2,2", "--eps", "+", "--allow-even"]).trim(), "1,1,1,1,1,1,1 / +");
}

#[test]
fn mult_examples() {
    assert_eq!(ok(&["mult", "--lambda", "3,3,1", "--eps", "++", "--lambda2", "3,3,1", "--eps2", "++"]).trim(), "1");
    assert_eq!(ok(&["mult", "--lambda", "3,3,1", "--eps", "+++", "--lambda2", "7", "--eps2", "+"]).trim(), "1");
    // Defects 1 and 3 differ.
    assert_eq!(ok(&["mult", "--lambda", "3,3,1", "--eps", "++", "--lambda2", "3,1,1,1,1", "--eps2", "+-"]).trim(), "0");
    let (code, _, _) = invoke(&["mult", "--lambda", "4,4,1", "--eps", "+", "--lambda2", "9", "--eps2", "+"]);
    assert_eq!(code, EXIT_INPUT);
    json_ok(&["mult", "--lambda", "3,3,1", "--eps", "++", "--lambda2", "7", "--eps2", "+", "--json"]);
}

#[test]
fn mult_table_is_csv() {
    let out = ok(&["mult", "--lambda", "3,3,1", "--eps", "++", "--table"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.contains(&"7,\"3,3,1\",++,1,\"7\",+,1,t^2"), "{rows:?}");
    json_ok(&["mult", "--lambda", "3,3,1", "--eps", "++", "--table", "--json"]);
}

#[test]
fn expand_examples() {
    let out = ok(&["expand", "--alpha", "1", "--beta", "2", "--order", "aba", "--oracle"]);
    assert_eq!(out, "(1;2): 1\n(2;1): t\n(3;): t^2\n");
    json_ok(&["expand", "--alpha", "1", "--beta", "2", "--order", "aba", "--json"]);
    let v = json_ok(&["expand", "--lambda", "3,2,2", "--eps", "+", "--json"]);
    assert_eq!(v["fiber"].as_array().unwrap().len(), 5);
    let (code, _, _) = invoke(&["expand", "--alpha", "1", "--beta", "2", "--order", "b"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn enumerate_counts() {
    let v = json_ok(&["enumerate", "--N", "7", "--json"]);
    assert_eq!(v["count"], 10);
    let out = ok(&["enumerate", "--N", "7", "--odd-only"]);
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn verify_examples() {
    let out = ok(&["verify", "--suite", "bijection", "--max-N", "12"]);
    assert!(out.contains("0 failures"), "{out}");
    let out = ok(&["verify", "--suite", "max", "--max-N", "1"]);
    assert!(out.contains("1 cases") && out.contains("0 failures"), "{out}");
    let v = json_ok(&["verify", "--suite", "all", "--max-N", "6", "--jobs", "2", "--json"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 9);
    let (code, _, _) = invoke(&["verify", "--suite", "nope", "--max-N", "3"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = invoke(&["verify", "--suite", "max", "--max-N", "0"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "--suite", "all", "--max-N", "7", "--json"],
        vec!["mult", "--lambda", "5,3,3,1,1", "--eps", "+-+", "--table"],
        vec!["enumerate", "--N", "10", "--json"],
    ] {
        assert_eq!(ok(&args), ok(&args), "{args:?}");
    }
    let a = ok(&["verify", "--suite", "pab", "--max-N", "4", "--jobs", "1"]);
    let b = ok(&["verify", "--suite", "pab", "--max-N", "4", "--jobs", "3"]);
    assert_eq!(a, b);
}
