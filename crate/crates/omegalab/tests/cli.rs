//! End-to-end checks of the command line binary: canonical renderings,
//! exit codes, and JSON output shape.

use std::process::{Command, Output};

fn omegalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omegalab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn omega_render_is_canonical() {
    let out = omegalab(&["omega", "--lambda", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "(x1 - x2) * [1,2] + (-x1 + x2) * [2,1]"
    );
}

#[test]
fn tabs_lists_the_graph_nodes() {
    let out = omegalab(&["tabs", "--lambda", "3,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "1,2,3|4,5",
            "1,2,4|3,5",
            "1,2,5|3,4",
            "1,3,4|2,5",
            "1,3,5|2,4",
            "count: 5 (hook formula: 5)",
        ]
    );
}

#[test]
fn unit_and_central_render() {
    let out = omegalab(&["central", "--lambda", "1,1", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(1/2) * [1,2] + (1/2) * [2,1]");

    let out = omegalab(&["unit", "--lambda", "2", "--t", "1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(1/2) * [1,2] + (-1/2) * [2,1]");
}

#[test]
fn jm_renders() {
    let out = omegalab(&["jm", "--n", "3", "--k", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(1) * [1,3,2] + (1) * [3,2,1]");
}

#[test]
fn rational_half_renders_in_scalars() {
    let out = omegalab(&["gmap", "--lambda", "2", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["kappa_text"], "-2");
    assert_eq!(value["ok"], true);
}

#[test]
fn selftest_small_battery() {
    let out = omegalab(&["selftest", "--max-n", "2", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["ok"], true);
    assert_eq!(value["max_n"], 2);
    let names: Vec<&str> = value["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for required in ["tabs", "units", "eq1", "quasi", "decomp", "symmetry", "g", "codepoly"] {
        assert!(names.contains(&required), "missing {required}");
    }
}

#[test]
fn omega_verify_reports() {
    let out = omegalab(&[
        "omega",
        "--lambda",
        "2,1",
        "--verify",
        "quasi,decomp,symmetry",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["quasi_idempotent"], true);
    assert_eq!(value["decomposition_ok"], true);
    assert_eq!(value["invariance_ok"], true);
    assert_eq!(value["alternation_ok"], true);
    assert!(value["scale"].is_object());
}

#[test]
fn usage_errors_exit_2() {
    // malformed partition
    let out = omegalab(&["tabs", "--lambda", "2,3"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown verification token
    let out = omegalab(&["omega", "--lambda", "2", "--verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // out-of-range selftest size
    let out = omegalab(&["selftest", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    // mismatched tableau shape
    let out = omegalab(&["unit", "--lambda", "2,1", "--t", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    // jm index out of range
    let out = omegalab(&["jm", "--n", "3", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_round_trips_through_parsers() {
    use omegalab::algebra::parse_scalar_element;
    use omegalab::{Partition, Permutation, StandardTableau};

    let out = omegalab(&["central", "--lambda", "2,1"]);
    let text = stdout(&out);
    let parsed = parse_scalar_element(text.trim()).unwrap();
    assert_eq!(parsed.to_string(), text.trim());

    for lambda in ["3,2", "2,2,1", "1,1,1"] {
        let p: Partition = lambda.parse().unwrap();
        assert_eq!(p.to_string(), lambda);
    }
    let sigma: Permutation = "[3,1,2]".parse().unwrap();
    assert_eq!(sigma.to_string(), "[3,1,2]");
    let t: StandardTableau = "1,2,4|3,5".parse().unwrap();
    assert_eq!(t.to_string(), "1,2,4|3,5");
}
