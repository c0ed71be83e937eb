mod common;

use std::path::PathBuf;

use common::json;

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let doc: serde_json::Value = serde_json::from_str(&text).expect("schema is JSON");
    jsonschema::validator_for(&doc).unwrap_or_else(|e| panic!("{name}: bad schema: {e}"))
}

fn check(name: &str, args: &[&str]) {
    let v = schema(name);
    let out = json(args);
    let errors: Vec<String> = v
        .iter_errors(&out)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    assert!(
        errors.is_empty(),
        "cpo {args:?} vs {name}.schema.json:\n{}",
        errors.join("\n")
    );
}

#[test]
fn every_json_output_validates() {
    let cases: &[(&str, &[&str])] = &[
        ("stage", &["stage", "--n", "5"]),
        ("stage", &["stage", "--n", "1"]),
        ("funcs", &["funcs", "--n", "4"]),
        ("ep", &["ep", "--scheme", "standard", "--n", "5"]),
        ("ep", &["ep", "--scheme", "alternative", "--n", "5", "--verify"]),
        ("paths", &["paths", "--scheme", "standard", "--depth", "6"]),
        ("paths", &["paths", "--scheme", "alternative", "--depth", "6"]),
        ("limit", &["limit", "--scheme", "standard"]),
        ("iso", &["iso", "--a", "lambda", "--b", "ω+1+ω*"]),
        ("order", &["order", "normalize", "--word", "lambda_prime"]),
        (
            "order",
            &["order", "compare", "--word", "v", "--x", "1:0", "--y", "2:5"],
        ),
        ("order", &["order", "neighbors", "--word", "phi", "--x", "1:0"]),
        ("order", &["order", "extremes", "--word", "xi"]),
        (
            "order",
            &["order", "elements", "--word", "omega_prime", "--window", "3"],
        ),
        ("funcspace", &["funcspace", "--cpo", "phi"]),
        ("funcspace", &["funcspace", "--cpo", "theta", "--action", "iso"]),
        (
            "funcspace",
            &[
                "funcspace",
                "--cpo",
                "lambda_prime",
                "--action",
                "table",
                "--window",
                "4",
            ],
        ),
        (
            "funcspace",
            &["funcspace", "--cpo", "theta", "--action", "table", "--window", "4"],
        ),
        (
            "funcspace",
            &[
                "funcspace",
                "--cpo",
                "phi",
                "--action",
                "eval",
                "--g",
                "tail:2",
                "--x",
                "3'",
            ],
        ),
        ("fpt", &["fpt", "--cpo", "phi", "--mu", "id"]),
        ("fpt", &["fpt", "--cpo", "lambda_prime", "--mu", "const1"]),
        ("fpt", &["fpt", "--cpo", "theta", "--mu", "id"]),
        ("mu", &["mu", "--at0", "0", "--at1", "0"]),
        ("mu", &["mu", "--at0", "1", "--at1", "0"]),
        ("string", &["string", "realize", "--spec", "III", "--index", "4"]),
        ("string", &["string", "opp", "--x", "...0011"]),
        ("string", &["string", "opp-pair", "--x", "(000..., ...111)"]),
        ("string", &["string", "lr", "--spec", "IV", "--index", "1"]),
        ("string", &["string", "lr-pair", "--a", "I,1", "--b", "III,2"]),
        ("string", &["string", "classify", "--x", "...111"]),
        ("string", &["string", "approx", "--spec", "III", "--i", "2", "--n", "6"]),
        (
            "string",
            &[
                "string",
                "limit-check",
                "--spec",
                "I",
                "--i",
                "2",
                "--j",
                "1",
                "--depth",
                "9",
            ],
        ),
        ("adjunction", &["adjunction", "--cpo", "lambda"]),
        (
            "adjunction",
            &["adjunction", "--pairing", "omega_prime", "--window", "10"],
        ),
        ("adjunction", &["adjunction", "--cpo", "v"]),
        ("boundary", &["boundary", "--cpo", "lambda_hat_prime"]),
        ("boundary", &["boundary", "--cpo", "v"]),
        ("decompose", &["decompose", "--cpo", "lambda_hat_prime"]),
        ("decompose", &["decompose", "--cpo", "v"]),
        ("lcr", &["lcr", "forward", "--x", "5'"]),
        ("lcr", &["lcr", "backward", "--x", "-3", "--endpoint", "L"]),
        ("lcr", &["lcr", "backward", "--x", "+inf", "--endpoint", "R"]),
        ("replicate", &["replicate"]),
        ("pipeline", &["pipeline"]),
        ("table8", &["table8"]),
        ("diagram", &["diagram", "--table", "5", "--n", "4"]),
        ("diagram", &["diagram", "--cpo", "lambda_prime", "--window", "3"]),
    ];
    for (name, args) in cases {
        check(name, args);
    }
}

#[test]
fn schemas_reject_wrong_shapes() {
    let v = schema("fpt");
    assert!(!v.is_valid(&serde_json::json!({"g": "psi_inf", "preimage": "inf"})));
    assert!(!v.is_valid(&serde_json::json!({"g": "psi_inf", "preimage": "inf", "value": 2})));
    assert!(!v.is_valid(&serde_json::json!({"g": "psi_inf", "preimage": "banana", "value": 0})));
    assert!(v.is_valid(&serde_json::json!({"applicable": false, "reason": "x"})));
    let t = schema("table8");
    assert!(!t.is_valid(&serde_json::json!({"rows": []})));
}
