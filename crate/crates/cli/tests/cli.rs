//! End-to-end runs of the `homquiver` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homquiver"))
        .args(args)
        .env_remove("HOMQUIVER_DIM_CAP")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn hh_compare_on_taft_two() {
    let args = ["hh", "--quiver", "crown:2", "--trunc", "2", "--field", "q", "--max-p", "4", "--max-q", "4", "--compare"];
    assert_eq!(code(&args), 0);
    let doc = json(&args);
    assert_eq!(doc["schema"], "homquiver/1");
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["closed"]["totals"], serde_json::json!([2, 1, 1, 1, 1]));
}

#[test]
fn hc_rejects_prime_fields() {
    assert_eq!(code(&["hc", "--quiver", "crown:2", "--trunc", "2", "--field", "fp:3"]), 2);
}

#[test]
fn hopf_axioms_for_n_four() {
    assert_eq!(code(&["verify", "hopf", "--n", "4"]), 0);
    assert_eq!(json(&["verify", "hopf", "--n", "4"])["passed"], true);
}

#[test]
fn hc_totals_for_taft_algebras() {
    let doc = json(&["hc", "--quiver", "crown:3", "--trunc", "3", "--max-deg", "3"]);
    assert_eq!(doc["totals"], serde_json::json!([3, 2, 3, 2]));
    let doc = json(&["hc", "--quiver", "crown:2", "--trunc", "2", "--max-deg", "2", "--max-q", "4", "--compare"]);
    assert_eq!(doc["oracle"]["totals"], serde_json::json!([2, 1, 2]));
}

#[test]
fn chern_of_a_projective_class() {
    let doc = json(&["chern", "--n", "2", "--p", "1", "2*P[0] + P[1]"]);
    assert_eq!(doc["basis"], "sigma");
    assert_eq!(doc["p"], 1);
    assert_eq!(doc["coeffs"], serde_json::json!({"sigma[0]": "2", "sigma[1]": "1"}));
}

#[test]
fn chern_of_a_tensor_product() {
    let doc = json(&["chern", "--n", "3", "--p", "1", "P[0]", "P[2]"]);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["coeffs"], serde_json::json!({"sigma[0]": "1", "sigma[1]": "1", "sigma[2]": "1"}));
}

#[test]
fn k0_products() {
    let doc = json(&["k0", "--n", "2", "product", "P[0,1]", "P[0,1]", "--ring", "gamma", "--compare"]);
    assert_eq!(doc["agree"], true);
    let labels: Vec<&str> = doc["closed"]["terms"].as_array().unwrap().iter().map(|t| t["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["N[0,1]", "N[1,0]"]);
    let doc = json(&["k0", "--n", "3", "product", "P[0,1]", "P[1,2]", "--oracle"]);
    assert_eq!(doc["product"]["dim"], 4);
}

#[test]
fn auslander_emitters() {
    let quiver = json(&["auslander", "--n", "3", "--emit", "quiver"]);
    assert_eq!(quiver["labels"].as_array().unwrap().len(), 9);
    let cartan = json(&["auslander", "--n", "2", "--emit", "cartan"]);
    assert_eq!(cartan["agree"], true);
    let happel = json(&["auslander", "--n", "3", "--emit", "happel"]);
    assert_eq!(happel["euler_characteristic"], 9);
    assert_eq!(happel["homology_totals"], serde_json::json!([9, 0, 0]));
    let hc = json(&["auslander", "--n", "3", "--emit", "hc", "--max-deg", "2"]);
    assert_eq!(hc["totals"], serde_json::json!([9, 0, 9]));
    let cmp = json(&["auslander", "--n", "2", "--emit", "hh", "--max-deg", "2", "--compare"]);
    assert_eq!(cmp["agree"], true);
    assert_eq!(code(&["auslander", "--n", "2", "--emit", "ext", "--compare"]), 2);
}

#[test]
fn verify_commands_pass() {
    for args in [
        &["verify", "sigma", "--n", "3", "--p", "1", "--rank"][..],
        &["verify", "sigma", "--n", "2", "--p", "1", "--target", "auslander", "--vertex", "1,0"],
        &["verify", "hh-oracle"],
        &["verify", "hc-oracle"],
        &["verify", "auslander", "--n", "3"],
        &["verify", "k0", "--n", "3"],
    ] {
        assert_eq!(code(args), 0, "{args:?}");
    }
}

#[test]
fn failed_checks_exit_three() {
    let args = ["verify", "sigma", "--n", "2", "--p", "1", "--coeffs=-2,1,2"];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(3));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["cycle"], false);
}

#[test]
fn dimension_cap_exits_four() {
    let args = ["hh", "--quiver", "loops:2", "--trunc", "3", "--oracle", "--dim-cap", "10"];
    assert_eq!(code(&args), 4);
    let out = Command::new(env!("CARGO_BIN_EXE_homquiver"))
        .args(["hc", "--quiver", "crown:3", "--trunc", "3", "--oracle"])
        .env("HOMQUIVER_DIM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn invalid_configurations_exit_two() {
    for args in [
        &["hh", "--quiver", "crown:0", "--trunc", "2"][..],
        &["hh", "--quiver", "crown:2", "--trunc", "2", "--field", "fp:4"],
        &["hh", "--quiver", "/nonexistent.json", "--trunc", "2"],
        &["hh", "--quiver", "crown:2", "--trunc", "2", "--oracle", "--compare"],
        &["k0", "--n", "2", "product", "P[5]", "P[0]"],
        &["chern", "--n", "2", "--p", "1", "P[0,0]", "P[1,1]"],
        &["verify", "sigma", "--n", "2", "--p", "1", "--vertex", "7"],
        &["auslander", "--n", "1"],
        &["bogus"],
    ] {
        assert_eq!(code(args), 2, "{args:?}");
    }
}

#[test]
fn quiver_files_are_accepted() {
    let dir = std::env::temp_dir().join(format!("homquiver-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kronecker.json");
    std::fs::write(
        &path,
        r#"{"vertices": ["s", "t"], "arrows": [{"id": "x", "src": "s", "tgt": "t"}, {"id": "y", "src": "s", "tgt": "t"}]}"#,
    )
    .unwrap();
    let doc = json(&["hh", "--quiver", path.to_str().unwrap(), "--trunc", "2", "--max-p", "2", "--max-q", "2", "--compare"]);
    assert_eq!(doc["agree"], true);
    assert_eq!(doc["closed"]["totals"], serde_json::json!([2, 0, 0]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_output() {
    let out = run(&["hh", "--quiver", "crown:2", "--trunc", "2", "--max-p", "2", "--max-q", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("p,q,dim\n0,0,2\n"));
    assert!(text.contains("\n1,2,1\n"));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["hh", "--quiver", "crown:3", "--trunc", "3", "--compare"][..],
        &["hc", "--quiver", "loops:2", "--trunc", "2", "--max-deg", "2", "--compare"],
        &["auslander", "--n", "3", "--emit", "ext"],
        &["auslander", "--n", "2", "--emit", "happel"],
        &["k0", "--n", "4", "product", "P[0,2]", "N[3,1]"],
        &["chern", "--n", "3", "--p", "2", "P[0] - 3*P[2]"],
        &["verify", "hopf", "--n", "3"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn every_command_has_help() {
    for args in [
        &["hh", "--help"][..],
        &["hc", "--help"],
        &["auslander", "--help"],
        &["k0", "--help"],
        &["chern", "--help"],
        &["verify", "hopf", "--help"],
        &["verify", "sigma", "--help"],
        &["verify", "hh-oracle", "--help"],
        &["verify", "hc-oracle", "--help"],
        &["verify", "auslander", "--help"],
        &["verify", "k0", "--help"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        assert!(String::from_utf8(out.stdout).unwrap().contains("Realizes:"), "{args:?}");
    }
}
