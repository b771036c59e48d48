//! End-to-end tests of the `rca` binary: output contracts, JSON
//! round-trips, exit codes, and byte-level determinism.

use std::process::{Command, Output};

use rca_core::quiver::QuiverPresentation;

fn rca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rca"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn fraction_prints_expansion_dual_and_dimension() {
    let output = rca(&["fraction", "12", "7"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "[2,4,2] / dual [3,2,3] / dim 5\n");

    let output = rca(&["fraction", "12", "5"]);
    assert_eq!(stdout(&output), "[3,2,3] / dual [2,4,2] / dim 5\n");
}

#[test]
fn quiver_json_round_trips() {
    let output = rca(&["quiver", "12", "7", "--format", "json"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let quiver: QuiverPresentation = serde_json::from_str(&text).expect("valid quiver JSON");
    assert_eq!(quiver.vertices.len(), 4);
    assert_eq!(quiver.arrows.len(), 10);
    assert_eq!(quiver.adjacency()[&(2, 0)], 2);
    let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(quiver.to_json(), reparsed);
}

#[test]
fn quiver_3_1_has_two_vertices_and_five_arrows() {
    let output = rca(&["quiver", "3", "1", "--format", "json"]);
    assert!(output.status.success());
    let quiver: QuiverPresentation =
        serde_json::from_str(&stdout(&output)).expect("valid quiver JSON");
    assert_eq!(quiver.vertices.len(), 2);
    assert_eq!(quiver.arrows.len(), 5);
}

#[test]
fn quiver_dot_output_is_graphviz() {
    let output = rca(&["quiver", "3", "1", "--format", "dot"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("digraph quiver {"));
    assert!(text.contains("v0 -> v1"));
    assert!(text.trim_end().ends_with('}'));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["quiver", "12", "7"],
        vec!["quiver", "5", "3", "--deformed", "--format", "json"],
        vec!["ring", "12", "7", "--deformed"],
        vec!["modules", "12", "7", "--json"],
    ] {
        let first = rca(&args);
        let second = rca(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn verify_passes_for_a1() {
    let output = rca(&["verify", "2", "1"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("PASS continued-fraction-identities"));
    assert!(text.trim_end().ends_with("pass (10/10 checks)"));
}

#[test]
fn verify_json_lists_every_check() {
    let output = rca(&["verify", "12", "7", "--json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let checks = value["checks"].as_array().expect("checks array");
    assert_eq!(checks.len(), 10);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn modules_json_lists_normalized_generators() {
    let output = rca(&["modules", "12", "7", "--json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let classes = value.as_array().expect("array of classes");
    assert_eq!(classes.len(), 4);
    assert_eq!(classes[1]["module"], "(x^7, y)");
    assert_eq!(classes[2]["generators"], serde_json::json!([[2, 0], [0, 2]]));
}

#[test]
fn golden_fixtures_verify() {
    for name in ["D5_2", "nonquotient_minus4"] {
        let output = rca(&["golden", name]);
        assert!(output.status.success(), "{name}");
        assert!(stdout(&output).trim_end().ends_with("pass (5/5 checks)"));
    }
}

#[test]
fn golden_accepts_a_lambda_override() {
    let output = rca(&["golden", "nonquotient_minus4", "--lambda", "3/2"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("pass (5/5 checks)"));
}

#[test]
fn golden_reads_fixture_files_from_disk() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let good = dir.join("tiny_good.txt");
    std::fs::write(&good, TINY_GOOD).unwrap();
    let output = rca(&["golden", "ignored", "--path", good.to_str().unwrap()]);
    assert!(output.status.success());

    let bad = dir.join("tiny_bad.txt");
    std::fs::write(&bad, &TINY_GOOD.replace("Y/t = t/X", "Y/t = t/Y")).unwrap();
    let output = rca(&["golden", "ignored", "--path", bad.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("FAIL label-identities (undeformed)"));
}

#[test]
fn exit_codes_distinguish_failure_classes() {
    // Usage / invalid arguments.
    assert_eq!(rca(&["ring", "4", "2"]).status.code(), Some(2));
    assert_eq!(rca(&["fraction", "12"]).status.code(), Some(2));
    assert_eq!(rca(&["golden", "E8"]).status.code(), Some(2));
    assert_eq!(
        rca(&["golden", "D5_2", "--lambda", "seven"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rca(&["golden", "nonquotient_minus4", "--lambda", "1"])
            .status
            .code(),
        Some(2)
    );
    // Bound exhaustion.
    assert_eq!(rca(&["quiver", "12", "7", "--bound", "3"]).status.code(), Some(3));
}

const TINY_GOOD: &str = r#"
[name]
tiny

[variables]
t X Y

[relations]
X*Y - t^2

[modules]
M0 = (1)
M1 = (X, t)

[arrows]
M0 -> M1 : t
M1 -> M0 : inc
M1 -> M0 : Y/t = t/X

[deformed.variables]
s s' X Y

[deformed.relations]
X*Y - s*s'

[deformed.modules]
M0' = (1)
M1' = (X, s)

[deformed.arrows]
M0' -> M1' : s
M1' -> M0' : inc
M1' -> M0' : Y/s = s'/X

[specialization]
s -> t
s' -> t
"#;
