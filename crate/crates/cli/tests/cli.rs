use std::process::Command;

use irrbase_cli::{run, EXIT_GUARD, EXIT_INPUT, EXIT_OK, EXIT_VERIFY};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("irrbase").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn realize_2_4_instantiated() {
    let (code, out, _) = call(&["realize", "--min", "2", "--max", "4", "--instantiate"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["lengths"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["b"], 2);
    assert_eq!(v["I"], 4);
    assert_eq!(v["group_order"], "87360");
    assert_eq!(v["domain_size"], 2080);
    assert_eq!(v["is_interval"], true);
    assert_eq!(v["spec"]["family"], "suzuki");
    assert_eq!(v["chain"]["irredundant_base"], true);
    assert!(v.get("timings").is_none());
    assert_eq!(v["witnesses"].as_object().unwrap().len(), 3);
}

#[test]
fn realize_2_9_is_refused_by_the_guard() {
    let (code, out, err) = call(&["realize", "--min", "2", "--max", "9"]);
    assert_eq!(code, EXIT_GUARD);
    let v = json(&out);
    assert_eq!(v["family"], "suzuki");
    // 3·5·7·11·13·17 = 255255 = 2m + 1
    assert_eq!(v["params"]["m"], 127627);
    assert_eq!(
        v["expected_lengths"],
        serde_json::json!([2, 3, 4, 5, 6, 7, 8, 9])
    );
    assert!(err.contains("guard"), "{err}");
}

#[test]
fn realize_without_instantiate_prints_spec() {
    let (code, out, _) = call(&["realize", "--min", "3", "--max", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim(),
        r#"{"family":"affine","params":{"d":1,"p":2,"f":4},"extended":true,"action":"vectors","expected_lengths":[3,4]}"#
    );
}

#[test]
fn output_is_byte_stable() {
    let args = ["realize", "--min", "3", "--max", "5", "--instantiate"];
    let (c1, a, _) = call(&args);
    let (c2, b, _) = call(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(call(&["realize", "--min", "1", "--max", "3"]).0, EXIT_INPUT);
    assert_eq!(call(&["realize", "--min", "4", "--max", "3"]).0, EXIT_INPUT);
    assert_eq!(call(&["realize", "--min", "2"]).0, EXIT_INPUT);
    assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
    // 4 = 2·2 is even, Suzuki fields need odd degree
    assert_eq!(
        call(&["realize", "--min", "2", "--max", "5", "--explicit-f", "4"]).0,
        EXIT_INPUT
    );
    // 12 has three prime factors, {3,4} needs two
    assert_eq!(
        call(&["realize", "--min", "3", "--max", "4", "--explicit-f", "12"]).0,
        EXIT_INPUT
    );
    assert_eq!(
        call(&["analyze", "--spec", "/nonexistent/spec.json"]).0,
        EXIT_INPUT
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn explicit_f_is_honored() {
    let (code, out, _) = call(&[
        "realize",
        "--min",
        "3",
        "--max",
        "4",
        "--explicit-f",
        "6",
        "--instantiate",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["spec"]["params"]["f"], 6);
    assert_eq!(v["lengths"], serde_json::json!([3, 4]));
}

#[test]
fn analyze_modes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = call(&["realize", "--min", "3", "--max", "5", "--emit-spec", p]);
    assert_eq!(code, EXIT_OK);

    let (code, out, _) = call(&["analyze", "--spec", p]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["lengths"], serde_json::json!([3, 4, 5]));
    assert_eq!(v["spec"]["params"]["modulus"].as_array().unwrap().len(), 9);

    let (_, out, _) = call(&["analyze", "--spec", p, "--min-base"]);
    assert_eq!(json(&out)["b"], 3);
    let (_, out, _) = call(&["analyze", "--spec", p, "--max-irredundant"]);
    let v = json(&out);
    assert_eq!(v["I"], 5);
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);

    // labels and indices mix; 256·255·8, then 255·8, then the Frobenius part
    let (code, out, _) = call(&["analyze", "--spec", p, "--chain", "(0);1;2"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["points"], serde_json::json!(["(0)", "(1)", "(2)"]));
    assert_eq!(v["orders"], serde_json::json!(["522240", "2040", "8", "1"]));
    assert_eq!(v["irredundant_base"], true);

    let (code, _, _) = call(&["analyze", "--spec", p, "--chain", "(0);bogus"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = call(&["analyze", "--spec", p, "--lengths", "--min-base"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn analyze_flags_wrong_expected_lengths() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    std::fs::write(
        &path,
        r#"{"family":"symmetric","params":{"n":5},"action":"natural","expected_lengths":[3]}"#,
    )
    .unwrap();
    let (code, out, _) = call(&["analyze", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_VERIFY);
    assert_eq!(json(&out)["lengths"], serde_json::json!([4]));
}

#[test]
fn malformed_spec_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    for text in [
        "not json",
        r#"{"family":"affine","params":{"d":1,"p":4,"f":2},"action":"vectors"}"#,
        r#"{"family":"symmetric","params":{"n":4},"action":"pairs"}"#,
    ] {
        std::fs::write(&path, text).unwrap();
        assert_eq!(
            call(&["analyze", "--spec", path.to_str().unwrap()]).0,
            EXIT_INPUT,
            "{text}"
        );
    }
}

#[test]
fn verify_paper_json_lists_every_check() {
    let (code, out, _) = call(&["verify-paper", "--json"]);
    let v = json(&out);
    let checks = v.as_array().unwrap();
    assert_eq!(checks.len(), 13);
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    // the semilinear affine groups do not reach d+1
    assert_eq!(failed, ["affine-2-4", "affine-1-4", "affine-2-8"]);
    assert_eq!(code, EXIT_VERIFY);
}

#[test]
fn guard_env_var_applies_to_the_binary() {
    let bin = env!("CARGO_BIN_EXE_irrbase");
    let out = Command::new(bin)
        .args(["realize", "--min", "2", "--max", "3", "--instantiate"])
        .env("IRRBASE_MAX_POINTS", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_GUARD));

    let out = Command::new(bin)
        .args(["realize", "--min", "3", "--max", "3", "--instantiate"])
        .env("IRRBASE_MAX_POINTS", "abc")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));

    let out = Command::new(bin)
        .args(["realize", "--min", "4", "--max", "4", "--instantiate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["group_order"], "120");
}
