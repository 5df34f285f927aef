use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use sgp_cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

const BUCHWEITZ: &str = "gaps:1,2,3,4,5,6,7,8,9,10,11,12,19,21,24,25";

fn sgp(args: &[&str]) -> (i32, String) {
    let mut buf = Vec::new();
    let code = run(std::iter::once("sgp").chain(args.iter().copied()), &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn check_golden(args: &[&str], file: &str, code: i32) {
    let (got_code, out) = sgp(args);
    assert_eq!(got_code, code, "{args:?}");
    assert_eq!(out, golden(file), "{args:?}");
}

#[test]
fn golden_reports() {
    check_golden(&["info", "gens:4,7"], "info_gens_4_7.json", EXIT_OK);
    check_golden(&["obstruct", BUCHWEITZ, "--n", "2"], "obstruct_buchweitz.json", EXIT_OK);
    check_golden(
        &["classify", "gens:4,6,17", "--N", "2", "--gamma", "1"],
        "classify_type_2_1.json",
        EXIT_OK,
    );
    check_golden(&["classify", BUCHWEITZ], "classify_symmetry_buchweitz.json", EXIT_OK);
    check_golden(&["bounds", "eval", "castelnuovo_c", "8", "3"], "bounds_castelnuovo.json", EXIT_OK);
    check_golden(
        &[
            "family",
            "superelliptic_iii",
            "--params",
            "N=2",
            "gamma=1",
            "A=3",
            "t=3",
            "g=16",
            "--emit",
            "gens",
        ],
        "family_superelliptic_iii.json",
        EXIT_OK,
    );
    check_golden(&["project", "gens:4,6,17", "--N", "2", "--gamma", "1"], "project_4_6_17.json", EXIT_OK);
    check_golden(&["info", "gaps:1,4"], "error_not_semigroup.json", EXIT_FAILURE);
}

#[test]
fn key_order_is_stable() {
    let (_, out) = sgp(&["classify", "gens:4,7", "--N", "2", "--gamma", "1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["N", "gamma", "cond_a", "cond_b", "cond_c", "is_type", "gamma_N"]);
    assert_eq!(v["cond_c"], Value::Bool(false));
}

#[test]
fn obstruct_values() {
    let (_, out) = sgp(&["obstruct", BUCHWEITZ, "--explain"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cardinality"], 46);
    assert_eq!(v["bc_bound"], 45);
    assert_eq!(v["passes_bc"], false);
    assert_eq!(v["lambda"], 6);
    assert_eq!(v["lemma_4_1_1"]["verdict"], "not_weierstrass");
    assert_eq!(v["explain"]["extra_sums"], serde_json::json!([48, 45, 43, 42, 40, 38]));
}

#[test]
fn exit_codes() {
    assert_eq!(sgp(&["info", "gens:4,x"]).0, EXIT_USAGE);
    assert_eq!(sgp(&["info", "gaps:3,1"]).0, EXIT_USAGE);
    assert_eq!(sgp(&["info", "gens:4,6"]).0, EXIT_FAILURE);
    assert_eq!(sgp(&["info"]).0, EXIT_USAGE);
    assert_eq!(sgp(&["info", "gens:4,7", "--frobnicate"]).0, EXIT_USAGE);
    assert_eq!(sgp(&["scan", "--genus", "3", "--predicate", "nope"]).0, EXIT_USAGE);
    assert_eq!(sgp(&["bounds", "eval", "rho9", "1"]).0, EXIT_USAGE);
    assert_eq!(sgp(&["bounds", "eval", "jenkins", "4", "6"]).0, EXIT_FAILURE);
    assert_eq!(sgp(&["family", "buchweitz", "--params", "g=15", "i=4"]).0, EXIT_FAILURE);
    assert_eq!(sgp(&["obstruct", "gens:2,3"]).0, EXIT_FAILURE);

    let (code, out) = sgp(&["family", "buchweitz", "--params", "g=15", "i=4"]);
    assert_eq!(code, EXIT_FAILURE);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], "ParityViolation");
    assert!(v["message"].as_str().unwrap().contains("odd"));
}

#[test]
fn negative_bound_arguments() {
    let (code, out) = sgp(&["bounds", "eval", "rho1", "0", "2", "-1"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], -3);
}

#[test]
fn cover_bump_g() {
    let base = ["family", "cover", "--params", "htilde=gens:2,3", "N=3", "g=25", "f=2"];
    // 2·25 - 2 = 48 is divisible by 3
    assert_eq!(sgp(&base).0, EXIT_FAILURE);
    let mut bumped = base.to_vec();
    bumped.push("--bump-g");
    let (code, out) = sgp(&bumped);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["params"]["g"], 26);
    assert_eq!(v["family"], "cover_h2");
}

#[test]
fn scan_examples() {
    let (code, out) = sgp(&["scan", "--genus", "2", "--predicate", "symmetric"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["semigroup"], "gaps:1,3");
    assert_eq!(lines[1]["summary"]["matches"], 1);
    assert_eq!(lines[1]["summary"]["scanned"], 2);

    let (_, out) = sgp(&["scan", "--genus", "16", "--predicate", "lemma411", "--jobs", "4"]);
    assert!(out.lines().any(|l| l.contains(&format!("\"{BUCHWEITZ}\""))));
}

#[test]
fn parallel_scan_matches_serial() {
    for pred in ["bc_fail", "type:3,2", "quasi_symmetric", "lemma411"] {
        let serial = sgp(&["scan", "--genus-min", "4", "--genus-max", "13", "--predicate", pred]);
        let parallel = sgp(&[
            "scan",
            "--genus-min",
            "4",
            "--genus-max",
            "13",
            "--predicate",
            pred,
            "--jobs",
            "6",
        ]);
        assert_eq!(serial, parallel, "{pred}");
    }
}

#[test]
fn binary_honours_cap_variable() {
    let bin = env!("CARGO_BIN_EXE_sgp");
    let out = Command::new(bin)
        .args(["scan", "--genus", "6", "--predicate", "symmetric"])
        .env("SGP_GENUS_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_FAILURE));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"], "CapExceeded");

    let out = Command::new(bin)
        .args(["scan", "--genus", "6", "--predicate", "symmetric"])
        .env("SGP_GENUS_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));

    let out = Command::new(bin).args(["--output", "yaml", "info", "gens:2,3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
