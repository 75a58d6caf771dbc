//! End-to-end tests of the `elko` binary: exit codes, golden reports and
//! the pipeline round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_elko"))
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_string()
}

#[test]
fn classify_golden_elko_is_class5() {
    let out = run(&["classify", &fixture("elko_rest.json"), "--quiet"]);
    let v = stdout_json(&out);
    assert_eq!(v["class"], 5);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["regular"], false);
}

#[test]
fn classify_rejects_wrong_component_count() {
    let out = run(&["classify", &fixture("three_components.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("components"), "stderr: {err}");
}

#[test]
fn malformed_json_exits_2_with_location() {
    let out = run(&["classify", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "stderr: {err}");
}

#[test]
fn map_apply_golden_chain() {
    let out = run(&[
        "map-apply",
        &fixture("class3_golden.json"),
        "--epsilon",
        "+1",
        "--quiet",
    ]);
    let v = stdout_json(&out);
    assert_eq!(
        v["output_spinor"]["components"],
        serde_json::json!([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 0.0]])
    );
    assert_eq!(v["mapped_class"], 5);
}

#[test]
fn golden_reports_are_stable() {
    let cases: [(&str, Vec<&str>); 5] = [
        (
            "classify_elko_rest.json",
            vec!["classify", &*Box::leak(fixture("elko_rest.json").into_boxed_str()), "--quiet"],
        ),
        (
            "fierz_class3_golden.json",
            vec!["fierz", &*Box::leak(fixture("class3_golden.json").into_boxed_str()), "--quiet"],
        ),
        (
            "map_apply_class3_golden.json",
            vec![
                "map-apply",
                &*Box::leak(fixture("class3_golden.json").into_boxed_str()),
                "--epsilon",
                "1",
                "--quiet",
            ],
        ),
        (
            "map_check_class3_golden.json",
            vec![
                "map-check",
                &*Box::leak(fixture("class3_golden.json").into_boxed_str()),
                "--class",
                "3",
                "--mode",
                "both",
                "--quiet",
            ],
        ),
        (
            "elko_gen_a_pm.json",
            vec![
                "elko-gen", "--type", "A", "--pair", "pm", "--mass", "2", "--p", "1,0,0",
                "--quiet",
            ],
        ),
    ];
    for (golden_name, args) in cases {
        let out = run(&args);
        assert!(out.status.success(), "{golden_name}");
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            golden(golden_name),
            "{golden_name}"
        );
    }
}

#[test]
fn elko_gen_verify_round_trip() {
    let momenta = [
        "0,0,0", "1,0,0", "0,1,0", "0,0,1", "0.3,-0.2,0.9", "-1,2,0.5",
        "2,2,2", "-0.1,-0.1,3", "0.7,0,-0.7", "5,-3,1",
    ];
    let dir = std::env::temp_dir();
    for conjugacy in ["S", "A"] {
        for pair in ["mp", "pm"] {
            for (i, p) in momenta.iter().enumerate() {
                let out = run(&[
                    "elko-gen", "--type", conjugacy, "--pair", pair, "--mass", "1.5",
                    "--p", p, "--quiet",
                ]);
                assert!(out.status.success());
                let file = dir.join(format!("elko_{conjugacy}_{pair}_{i}.json"));
                std::fs::write(&file, &out.stdout).unwrap();
                let verify = run(&["elko-verify", file.to_str().unwrap(), "--quiet"]);
                let v = stdout_json(&verify);
                assert_eq!(v["verified"], true, "{conjugacy} {pair} {p}: {v}");
                assert_eq!(v["is_class5"], true);
                let expect_sign = if conjugacy == "S" { 1 } else { -1 };
                assert_eq!(v["c_eigen_sign"], expect_sign);
                assert!(v["dual_pairing"]["value"].as_f64().is_some());
            }
        }
    }
}

#[test]
fn solve_then_check_reports_mappable() {
    let dir = std::env::temp_dir();
    for (class, mode, free) in [
        ("1", "direct", "1,0.5"),
        ("2", "direct", "1,0.2,-0.3"),
        ("3", "direct", "0.8,-0.1,0.4"),
        ("3", "paper", "1,0,0.3"),
    ] {
        let out = run(&[
            "map-solve", "--class", class, "--mode", mode, "--free", free, "--seed", "11",
            "--quiet",
        ]);
        assert!(
            out.status.success(),
            "solve class {class} {mode}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let file = dir.join(format!("solved_{class}_{mode}.json"));
        std::fs::write(&file, &out.stdout).unwrap();
        let check = run(&[
            "map-check", file.to_str().unwrap(), "--class", class, "--mode", mode,
            "--tolerance", "1e-8", "--quiet",
        ]);
        let v = stdout_json(&check);
        assert_eq!(v["mappable"], true, "class {class} {mode}: {v}");
    }
}

#[test]
fn sample_is_deterministic_and_streams() {
    let a = run(&["sample", "--class", "4", "--count", "5", "--seed", "42", "--quiet"]);
    let b = run(&["sample", "--class", "4", "--count", "5", "--seed", "42", "--quiet"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<_> = String::from_utf8_lossy(&a.stdout).trim().lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    let dir = std::env::temp_dir();
    for (i, line) in lines.iter().enumerate() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["components"].as_array().unwrap().len(), 4);
        // every sampled spinor classifies into the requested class
        let file = dir.join(format!("sample4_{i}.json"));
        std::fs::write(&file, line).unwrap();
        let out = run(&["classify", file.to_str().unwrap(), "--quiet"]);
        assert_eq!(stdout_json(&out)["class"], 4);
    }
}

#[test]
fn sample_count_zero_is_empty() {
    let out = run(&["sample", "--class", "1", "--count", "0", "--seed", "1"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn invalid_flags_are_validation_errors() {
    let out = run(&["sample", "--class", "7", "--count", "1", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["map-apply", &fixture("elko_rest.json"), "--epsilon", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["map-solve", "--class", "1", "--mode", "paper", "--free", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["elko-gen", "--type", "X", "--pair", "mp", "--mass", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn class3_fails_reports_unmappable() {
    let out = run(&[
        "map-check", &fixture("class3_fails.json"), "--class", "3", "--mode", "paper",
        "--quiet",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["mappable"], false);
    assert_eq!(v["report"]["residuals"]["partes1"], 1.0);
}
