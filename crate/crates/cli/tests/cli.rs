use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersphere"))
        .args(args)
        .env_remove("SUPERSPHERE_QUAD_ORDER")
        .output()
        .expect("binary runs")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["chern", "--sign", "minus", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["chern", "--sign", "sideways", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["projector", "--sign", "minus", "--n", "2", "--check-golden"]).status.code(),
        Some(2)
    );
}

#[test]
fn chern_reports_an_integer_of_magnitude_n() {
    for (sign, n) in [("minus", 1), ("plus", 1), ("minus", 3), ("plus", 2)] {
        let out = run(&["chern", "--sign", sign, "--n", &n.to_string(), "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        let v = json_stdout(&out);
        assert_eq!(v["chern_number"].as_i64().unwrap().abs(), n);
        assert_eq!(v["k_label"]["parity"], "even");
        assert!(v["chern_form"].is_array());
    }
}

#[test]
fn chern_text_output_has_the_number() {
    let out = run(&["chern", "--sign", "plus", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "chern number: 2"), "{text}");
}

#[test]
fn golden_projector_check_passes() {
    for sign in ["minus", "plus"] {
        let out = run(&["projector", "--sign", sign, "--n", "1", "--check-golden"]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn projector_json_in_both_coordinate_systems() {
    for coords in ["group", "base"] {
        let out = run(&["projector", "--sign", "minus", "--n", "2", "--coords", coords, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json_stdout(&out);
        assert_eq!(v["coordinates"], coords);
        assert_eq!(v["matrix"]["rows"]["even"], 3);
        assert_eq!(v["matrix"]["rows"]["odd"], 2);
    }
}

#[test]
fn structural_suites_pass() {
    for suite in ["algebra", "matrix", "forms", "monopole"] {
        let out = run(&["verify", "--suite", suite, "--n-max", "2", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json_stdout(&out)["status"], "pass");
    }
}

#[test]
fn chern_suite_reports_the_sign_discrepancy() {
    let out = run(&["verify", "--suite", "chern", "--n-max", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_stdout(&out);
    let failing: Vec<&str> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|n| *n == "chern.charge" || *n == "chern.chain"), "{failing:?}");
    for r in v["records"].as_array().unwrap() {
        if r["name"] == "chern.integer" || r["name"] == "chern.quadrature" || r["name"] == "chern.base_path" {
            assert_eq!(r["status"], "pass", "{r}");
        }
    }
    assert!(String::from_utf8_lossy(&out.stderr).contains("failed"));
}

#[test]
fn quadrature_order_comes_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_supersphere");
    let bad = Command::new(bin)
        .args(["verify", "--suite", "chern", "--n-max", "1"])
        .env("SUPERSPHERE_QUAD_ORDER", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let low = Command::new(bin)
        .args(["verify", "--suite", "chern", "--n-max", "3", "--format", "json"])
        .env("SUPERSPHERE_QUAD_ORDER", "2")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&low.stdout).unwrap();
    let quad_failed = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["name"] == "chern.quadrature" && r["status"] == "fail");
    assert!(quad_failed, "two quadrature nodes cannot integrate the n = 3 density");
}
