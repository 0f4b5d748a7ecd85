//! End-to-end checks of the `coxangle` binary: exit codes, output formats
//! and error reporting.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_coxangle"))
        .args(args)
        .env_remove("COXANGLE_ORBIT_BUDGET")
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let r = run(&full);
    let text = if r.code == 0 { &r.stdout } else { &r.stderr };
    let v = serde_json::from_str(text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (r.code, v)
}

fn sample(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../specs")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn min_angle_table_for_alternating_a7() {
    let r = run(&["min-angle", &sample("a7-alternating.spec")]);
    assert_eq!(r.code, 0);
    let row = r.stdout.lines().find(|l| l.starts_with("A7")).unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    assert!(cells.contains(&"π/2"), "{row}");
    assert!(cells.contains(&"0"), "{row}");
    assert!(cells.contains(&"GT_PI_3"), "{row}");
}

#[test]
fn angle_json_for_b3_short_end() {
    let (code, v) = json(&["angle", "--diagram", "B3", "--node", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "exact_cos");
    assert_eq!(v["cos"], "1/3");
    assert_eq!(v["radians_approx"].as_f64().unwrap(), 1.23095941734);
    assert_eq!(v["verdict"], "GT_PI_3");
}

#[test]
fn rational_pi_angles_carry_a_fraction() {
    let (_, v) = json(&["angle", "--diagram", "I2(5)", "--node", "1"]);
    assert_eq!(v["kind"], "rational_pi");
    assert_eq!(v["pi_fraction"], "2/5");
    assert!(v.get("cos").is_none());
}

#[test]
fn validate_reports_violations_with_exit_one() {
    let r = run(&["validate", &sample("invalid-a3.spec")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("opposition_violated"), "{}", r.stdout);

    // the report itself is the result, so it goes to stdout
    let r = run(&["--format", "json", "validate", &sample("invalid-a3.spec")]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["line"], 2);
    assert_eq!(v["violations"][0]["kind"], "opposition_violated");
}

#[test]
fn sample_specs_validate() {
    for name in [
        "a5-outer.spec",
        "a7-alternating.spec",
        "e7-quadrangle.spec",
        "e7-end-node.spec",
        "pentagon.spec",
    ] {
        let r = run(&["validate", &sample(name)]);
        assert_eq!(r.code, 0, "{name}: {}{}", r.stdout, r.stderr);
    }
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.spec");
    std::fs::write(&path, "diagram A3\n\nedge 1 2\n").unwrap();
    let (code, v) = json(&["min-angle", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "parse_error");
    assert_eq!(v["error"]["line"], 3);
    assert!(v["error"]["column"].is_u64());

    let r = run(&["min-angle", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("at 3:1"), "{}", r.stderr);
}

#[test]
fn missing_file_is_a_domain_error() {
    let (code, v) = json(&["min-angle", "/nonexistent/x.spec"]);
    assert_eq!(code, 1);
    assert!(v["error"]["code"].is_string());
}

#[test]
fn usage_errors_are_json_in_json_mode() {
    let (code, v) = json(&["angle", "--diagram", "A3"]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].is_string());
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn bad_gamma_is_a_parse_error() {
    let (code, _) = json(&["fold", "--diagram", "A3", "--gamma", "(1 3"]);
    assert_eq!(code, 2);
    let (code, v) = json(&["fold", "--diagram", "A3", "--gamma", "(1 2)"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "not_an_automorphism");
}

#[test]
fn fold_e6_flip_gives_f4() {
    let (code, v) = json(&["fold", "--diagram", "E6", "--gamma", "(1 6)(3 5)"]);
    assert_eq!(code, 0);
    assert_eq!(v["folded"]["type"], "F4");
}

#[test]
fn opposition_of_d5_swaps_the_fork() {
    let (_, v) = json(&["opposition", "--diagram", "D5"]);
    assert_eq!(v["opposition"], "(4 5)");
    assert_eq!(v["map"]["4"], 5);
}

#[test]
fn orbit_sizes() {
    let (_, v) = json(&["orbit", "--diagram", "E7", "--node", "7"]);
    assert_eq!(v["size"], 56);
    assert_eq!(v["vectors"].as_array().unwrap().len(), 56);
    let (_, v) = json(&["orbit", "--diagram", "E8", "--node", "8", "--count-only"]);
    assert_eq!(v["size"], 240);
    assert!(v.get("vectors").is_none());
}

#[test]
fn orbit_budget_flag_and_env() {
    let (code, v) = json(&[
        "--orbit-budget",
        "10",
        "orbit",
        "--diagram",
        "E7",
        "--node",
        "7",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "orbit_budget_exceeded");

    let out = Command::new(env!("CARGO_BIN_EXE_coxangle"))
        .args(["orbit", "--diagram", "E7", "--node", "7", "--count-only"])
        .env("COXANGLE_ORBIT_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn csv_headers_are_fixed() {
    let r = run(&[
        "--format",
        "csv",
        "enumerate",
        "--diagram",
        "E7",
        "--rel-rank",
        "2",
    ]);
    assert_eq!(r.code, 0);
    let mut lines = r.stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "diagram,gamma,anisotropic,relative_rank,angle,cos,radians_approx,verdict,witnesses"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().any(|r| r.contains("EQ_PI_3")));

    let r = run(&["--format", "csv", "catalog"]);
    assert_eq!(
        r.stdout.lines().next().unwrap(),
        "name,group,diagram,gamma,anisotropic,expected,computed,verdict,status"
    );
}

#[test]
fn catalog_passes() {
    let (code, v) = json(&["catalog"]);
    assert_eq!(code, 0);
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() >= 30);
}

#[test]
fn enumerate_notes_the_combinatorial_caveat() {
    let r = run(&["enumerate", "--diagram", "A3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("combinatorial"));
}
