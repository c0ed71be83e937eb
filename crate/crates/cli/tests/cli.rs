mod common;

use common::{cpo, json, ok};
use serde_json::json;

#[test]
fn fpt_phi_id_json() {
    assert_eq!(
        ok(&["fpt", "--cpo", "phi", "--mu", "id", "--format", "json"]),
        "{\"g\":\"psi_inf\",\"preimage\":\"inf\",\"value\":0}\n"
    );
}

#[test]
fn stage_four() {
    assert_eq!(ok(&["stage", "--n", "4"]), "000 001 011 111\n");
}

#[test]
fn hat_lambda_prime_vs_lambda_prime() {
    assert_eq!(
        ok(&["iso", "--a", "lambda_hat_prime", "--b", "lambda_prime"]),
        "not isomorphic: ω+1+ω* vs ω+1+1+ω*\n"
    );
}

#[test]
fn fixed_points_per_mu() {
    let cases = [
        ("phi", "const0", json!({"g": "psi_0", "preimage": "0", "value": 0})),
        ("lambda", "const0", json!({"g": "psi_0", "preimage": "0", "value": 0})),
        ("phi", "const1", json!({"g": "psi_0'", "preimage": "0'", "value": 1})),
        ("lambda", "id", json!({"g": "psi_inf", "preimage": "inf", "value": 0})),
        (
            "lambda_prime",
            "id",
            json!({"g": "psi_inf'", "preimage": "inf'", "value": 1}),
        ),
    ];
    for (c, mu, want) in cases {
        assert_eq!(json(&["fpt", "--cpo", c, "--mu", mu]), want, "{c} {mu}");
    }
}

#[test]
fn fpt_not_applicable_is_a_verdict() {
    for c in ["theta", "v"] {
        let r = cpo(&["fpt", "--cpo", c, "--mu", "id"]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.starts_with("not applicable"), "{}", r.stdout);
        let v = json(&["fpt", "--cpo", c, "--mu", "const0"]);
        assert_eq!(v["applicable"], json!(false));
        assert!(v["reason"].as_str().unwrap().contains("immediate predecessor"));
    }
}

#[test]
fn negative_verdicts_exit_zero() {
    for args in [
        &["iso", "--a", "theta", "--b", "phi"][..],
        &["adjunction", "--cpo", "lambda"],
        &["funcspace", "--cpo", "v", "--action", "iso"],
        &["mu", "--at0", "1", "--at1", "0"],
    ] {
        assert_eq!(cpo(args).code, 0, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["stage"],
        &["stage", "--n", "0"],
        &["fpt", "--cpo", "nowhere", "--mu", "id"],
        &["fpt", "--cpo", "phi", "--mu", "negate"],
        &["ep", "--scheme", "sideways", "--n", "3"],
        &["string", "opp", "--x", "0101..."],
        &["string", "opp", "--x", "0011"],
        &["string", "classify", "--x", "...2"],
        &["lcr", "forward", "--x", "7''"],
        &["lcr", "backward", "--x", "m'", "--endpoint", "middle"],
        &[
            "funcspace",
            "--cpo",
            "phi",
            "--action",
            "eval",
            "--g",
            "inf",
            "--x",
            "banana",
        ],
        &["replicate", "--x", "(000..., ...000)"],
        &["stage", "--n", "3", "--format", "dot"],
        &["iso", "--a", "phi", "--b", "ω+ω+"],
        &["adjunction", "--cpo", "phi"],
    ] {
        let r = cpo(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(!r.stderr.is_empty());
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["pipeline", "--format", "json"][..],
        &["table8"],
        &["funcspace", "--cpo", "lambda_prime", "--action", "table"],
        &["diagram", "--table", "1", "--format", "dot"],
        &["decompose", "--cpo", "v", "--format", "json"],
        &["adjunction", "--pairing", "xi", "--window", "30", "--format", "json"],
    ] {
        let first = cpo(args);
        for _ in 0..3 {
            let again = cpo(args);
            assert_eq!(again.stdout, first.stdout, "{args:?}");
            assert_eq!(again.code, first.code);
        }
    }
}

#[test]
fn funcs_matches_next_stage() {
    for n in 1..=8 {
        let n = n.to_string();
        let v = json(&["funcs", "--n", &n]);
        assert_eq!(v["equals_next_stage"], json!(true));
        let next: usize = n.parse::<usize>().unwrap() + 1;
        assert_eq!(v["count"], json!(next));
    }
}

#[test]
fn ep_verify_reports_all_laws() {
    for scheme in ["standard", "alternative"] {
        let out = ok(&["ep", "--scheme", scheme, "--n", "7", "--verify"]);
        assert_eq!(out.matches(": holds").count(), 4, "{out}");
    }
}

#[test]
fn standard_paths_at_depth_ten() {
    let out = ok(&["paths", "--scheme", "standard", "--depth", "10"]);
    assert!(out.contains("0,0,1,1,2,2,3,3,4,4,… ↔ ∞"), "{out}");
    assert!(out.contains("0,0,1,1,2,2,2,2,2,2,… ↔ 2\n"), "{out}");
}

#[test]
fn string_examples() {
    assert_eq!(ok(&["string", "opp", "--x", "...00011"]), "⋯011 ↦ 001⋯\n");
    assert_eq!(
        ok(&["string", "lr", "--spec", "II", "--index", "2"]),
        "(II, 2) = 011⋯ ↦ (IV, 2) = ⋯111\n"
    );
    let v = json(&["string", "classify", "--x", "011..."]);
    assert_eq!(v["value"], json!({"family": "II", "index": 2}));
}

#[test]
fn boundary_and_replication() {
    let hat = json(&["boundary", "--cpo", "lambda_hat_prime"]);
    assert_eq!(hat["label"], json!("m"));
    assert_eq!(hat["self_opp"], json!(true));
    assert_eq!(
        (hat["predecessor"].clone(), hat["successor"].clone()),
        (json!(null), json!(null))
    );
    let v = json(&["boundary", "--cpo", "v"]);
    assert_eq!(v["label"], json!("m'"));
    assert_eq!(
        (v["predecessor"].clone(), v["successor"].clone()),
        (json!("-1"), json!("+1"))
    );
    let r = json(&["replicate"]);
    assert_eq!(
        (r["intent_label"].clone(), r["extent_label"].clone()),
        (json!("inf'"), json!("inf"))
    );
}

#[test]
fn lcr_round_trip_at_the_collision() {
    assert_eq!(json(&["lcr", "forward", "--x", "0"])["image"], json!("m'"));
    assert_eq!(json(&["lcr", "forward", "--x", "0'"])["image"], json!("m'"));
    assert_eq!(
        json(&["lcr", "backward", "--x", "m'", "--endpoint", "R"])["image"],
        json!("0")
    );
    assert_eq!(
        json(&["lcr", "backward", "--x", "m'", "--endpoint", "L"])["image"],
        json!("0'")
    );
}

#[test]
fn element_literals_accept_strings() {
    let by_label = json(&["lcr", "forward", "--x", "inf"]);
    let by_string = json(&["lcr", "forward", "--x", "...111"]);
    assert_eq!(by_label, by_string);
}
