use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use tempfile::TempDir;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("invdeg").chain(args.iter().copied());
    let code = invdeg_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, doc: &Value) -> String {
    let path = dir.join(name);
    fs::write(&path, doc.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap()
}

fn worked_public() -> Value {
    json!({"p": 7, "n": 2, "generators": [[[3, 1], [0, 2]]], "messages": [[1, 1], [1, 3]], "variant": 2})
}

fn worked_private() -> Value {
    json!({
        "p": 7, "n": 2, "a": [[1, 1], [0, 1]], "invariant": {"exponents": [0, 3]}, "table": [1, 6],
        "secret_action": {"n": 2, "generators": [{"modulus": 6, "weights": [1, 2]}]}
    })
}

#[test]
fn mindeg_example() {
    let dir = TempDir::new().unwrap();
    let act = write(
        dir.path(),
        "act.json",
        &json!({"n": 2, "generators": [{"modulus": 3, "weights": [1, 2]}]}),
    );
    let (code, out, _) = run(&["mindeg", "--action", &act, "--dmax", "64"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"degree":2,"witness":[1,1]}"#);
    let (code, out, _) = run(&["mindeg", "--action", &act, "--method", "ip"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["degree"], 2);
}

#[test]
fn mindeg_exhausted_and_infinite() {
    let dir = TempDir::new().unwrap();
    let act = write(
        dir.path(),
        "a.json",
        &json!({"n": 2, "generators": [{"modulus": 5, "weights": [1, 1]}]}),
    );
    let (code, out, _) = run(&["mindeg", "--action", &act, "--dmax", "4"]);
    assert_eq!((code, parse(&out)), (3, json!({"not_found_up_to": 4})));
    let torus = write(
        dir.path(),
        "t.json",
        &json!({"n": 2, "generators": [{"modulus": 0, "weights": [1, 1]}]}),
    );
    let (code, out, _) = run(&["mindeg", "--action", &torus]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["infinite"], true);
    let (code, _, err) = run(&["mindeg", "--action", &torus, "--method", "ip"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn gl2_example_and_invalid() {
    let (code, out, _) = run(&[
        "gl2", "--e", "6", "--g", "6", "--v1", "3", "--v2", "2", "--j", "1", "--d", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"bruteforce":2,"closed_form":2}"#);
    let (code, _, err) = run(&[
        "gl2", "--e", "6", "--g", "6", "--v1", "3", "--v2", "2", "--j", "2", "--d", "1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("gcd(e,j)"));
}

#[test]
fn attack_on_worked_key() {
    let dir = TempDir::new().unwrap();
    let pk = write(dir.path(), "pk.json", &worked_public());
    let (code, out, _) = run(&["attack", "--pub", &pk, "--dmax", "2"]);
    assert_eq!(code, 3);
    assert_eq!(parse(&out)["found_degree"], Value::Null);
    let ct = write(dir.path(), "ct.json", &json!({"u": [4, 2]}));
    let (code, out, _) = run(&["attack", "--pub", &pk, "--ct", &ct]);
    assert_eq!(code, 0);
    let doc = parse(&out);
    assert_eq!(doc["found_degree"], 3);
    assert_eq!(doc["recovered_index"], 0);
    assert_eq!(
        doc["basis"],
        json!([[{"coeff": 1, "monomial_exponents": [0, 3]}]])
    );
    assert_eq!(
        doc["system_sizes"],
        json!([[1, 2, 2], [2, 3, 3], [3, 4, 4]])
    );
}

#[test]
fn decrypt_worked_ciphertext() {
    let dir = TempDir::new().unwrap();
    let sk = write(dir.path(), "sk.json", &worked_private());
    let ct = write(dir.path(), "ct.json", &json!({"u": [4, 2]}));
    let (code, out, _) = run(&["decrypt", "--priv", &sk, "--ct", &ct]);
    assert_eq!((code, out.trim()), (0, r#"{"index":0}"#));
    let bad = write(dir.path(), "bad.json", &json!({"u": [0, 0]}));
    assert_eq!(run(&["decrypt", "--priv", &sk, "--ct", &bad]).0, 2);
}

#[test]
fn keygen_encrypt_decrypt_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        dir.path(),
        "cfg.json",
        &json!({
            "p": 31, "action": {"n": 2, "generators": [{"modulus": 6, "weights": [1, 2]}]},
            "messages": 3, "generators": 2, "word_length": 3, "variant": 1
        }),
    );
    let d = dir.path().to_str().unwrap();
    let (pk, sk) = (format!("{d}/pk.json"), format!("{d}/sk.json"));
    let (code, _, err) = run(&[
        "keygen", "--config", &cfg, "--seed", "7", "--pub", &pk, "--priv", &sk,
    ]);
    assert_eq!(code, 0, "{err}");
    let first = fs::read(&pk).unwrap();
    run(&[
        "keygen", "--config", &cfg, "--seed", "7", "--pub", &pk, "--priv", &sk,
    ]);
    assert_eq!(fs::read(&pk).unwrap(), first);

    let (code, out, _) = run(&["encrypt", "--pub", &pk, "--index", "2", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        run(&["encrypt", "--pub", &pk, "--index", "2", "--seed", "5"]).1,
        out
    );
    let ct = write(dir.path(), "ct.json", &parse(&out));
    let (code, out, _) = run(&["decrypt", "--priv", &sk, "--ct", &ct]);
    assert_eq!((code, parse(&out)), (0, json!({"index": 2})));
    let (code, out, _) = run(&["attack", "--pub", &pk, "--ct", &ct]);
    assert_eq!(
        (code, parse(&out)["recovered_index"].clone()),
        (0, json!(2))
    );
}

#[test]
fn seed_is_mandatory() {
    let (code, _, err) = run(&["encrypt", "--pub", "x.json", "--index", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("--seed"));
}

#[test]
fn unknown_flags_and_files() {
    assert_eq!(run(&["gl2", "--e", "6", "--bogus", "1"]).0, 2);
    assert_eq!(run(&["mindeg", "--action", "/nonexistent.json"]).0, 2);
}

#[test]
fn superinv_example_and_single_summand() {
    let dir = TempDir::new().unwrap();
    let act = write(
        dir.path(),
        "s.json",
        &json!({"free_rank": 1, "torsion": [], "g": [0], "xi": ["1"], "weights": [[1], [-1]], "field": {"type": "rational"}}),
    );
    let (code, out, _) = run(&["superinv", "--action", &act, "--dmax", "6"]);
    assert_eq!(code, 0);
    let doc = parse(&out);
    assert_eq!(doc["degree"], 2);
    assert_eq!(doc["basis"].as_array().unwrap().len(), 2);
    let one = write(
        dir.path(),
        "one.json",
        &json!({"free_rank": 1, "g": [0], "xi": ["1/2"], "weights": [[1]], "field": {"type": "prime", "p": 7}}),
    );
    let (code, out, _) = run(&["superinv", "--action", &one, "--dmax", "6"]);
    assert_eq!((code, parse(&out)), (3, json!({"not_found_up_to": 6})));
    let bad = write(
        dir.path(),
        "bad.json",
        &json!({"free_rank": 1, "g": [1], "xi": ["1"], "weights": [[1]], "field": {"type": "rational"}}),
    );
    assert_eq!(run(&["superinv", "--action", &bad]).0, 2);
}

#[test]
fn selftest_single_criterion() {
    let (code, out, _) = run(&["selftest", "--only", "2"]);
    assert_eq!(code, 0);
    let doc = parse(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["criteria"][0]["id"], 2);
    assert_eq!(run(&["selftest", "--only", "99"]).0, 2);
}
