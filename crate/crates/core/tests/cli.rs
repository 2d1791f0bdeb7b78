//! End-to-end tests of the command-line binary: verbs, formats, exit codes,
//! and byte-level determinism.

use std::process::{Command, Output};

fn roughlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roughlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn testdata(name: &str) -> String {
    format!("{}/testdata/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn info_renders_text_and_json() {
    let text = roughlat(&["info", &testdata("staircase.json")]);
    assert_eq!(code_of(&text), 0);
    let body = stdout_of(&text);
    assert!(body.contains("class: reflexive"));
    assert!(body.contains("R(a) = ab"));

    let json = roughlat(&["info", &testdata("staircase.json"), "--format", "json"]);
    assert_eq!(code_of(&json), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["schema"], "roughlat.report.v1");
    assert_eq!(value["info"]["class"], "reflexive");
    assert_eq!(value["info"]["equivalence_closure_classes"][0], "abc");
}

#[test]
fn rs_lists_the_eight_staircase_pairs() {
    let out = roughlat(&["rs", &testdata("staircase.json"), "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["rs"]["size"], 8);
    assert_eq!(value["rs"]["is_lattice"], true);
    let pairs = value["rs"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 8);
    assert_eq!(pairs[3]["lower"], "a");
    assert_eq!(pairs[3]["upper"], "ab");
}

#[test]
fn dm_reports_the_completion_added_elements() {
    let out = roughlat(&["dm", &testdata("path_tolerance.json")]);
    assert_eq!(code_of(&out), 0);
    let body = stdout_of(&out);
    assert!(body.contains("RS: 23 approximation pairs; not a lattice"));
    assert!(body.contains("DM(RS): 25 elements (23 approximation pairs + 2 added)"));
    assert!(body.contains("added"));
}

#[test]
fn check_chajda_reports_informationally_with_exit_zero() {
    let out = roughlat(&["check", &testdata("staircase.json"), "chajda"]);
    assert_eq!(code_of(&out), 0);
    let body = stdout_of(&out);
    assert!(body.contains("check chajda: info"));
    assert!(body.contains("x ∧ (∼x ∨ y) = (∅,ab)"));
    assert!(body.contains("(x ∧ ∼x) ∨ (x ∧ y) = (∅,a)"));
}

#[test]
fn check_pbz_star_exit_code_follows_the_verdict() {
    let pass = roughlat(&[
        "check",
        &testdata("arrow_quasiorder.json"),
        "pbz-star",
        "--neg",
        "from-equivalence:ab|c",
    ]);
    assert_eq!(code_of(&pass), 0);
    assert!(stdout_of(&pass).contains("check pbz-star: pass"));

    let fail = roughlat(&[
        "check",
        &testdata("arrow_quasiorder.json"),
        "pbz-star",
        "--neg",
        "from-equivalence:abc",
    ]);
    assert_eq!(code_of(&fail), 1);
    let body = stdout_of(&fail);
    assert!(body.contains("check pbz-star: FAIL"));
    // The axioms themselves hold; only the interplay law fails.
    assert!(body.contains("verdict: bz=true pbz=true pbz*=false"));
}

#[test]
fn check_bz_without_neg_is_a_usage_error() {
    let out = roughlat(&["check", &testdata("staircase.json"), "bz"]);
    assert_eq!(code_of(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--neg"));
}

#[test]
fn check_suite_prints_one_line_per_item() {
    let out = roughlat(&["check", &testdata("two_block_equivalence.json"), "suite"]);
    assert_eq!(code_of(&out), 0);
    let body = stdout_of(&out);
    let item_lines = body
        .lines()
        .filter(|l| {
            l.starts_with("  pass  ")
                || l.starts_with("  FAIL  ")
                || l.starts_with("  info  ")
                || l.starts_with("  skip  ")
        })
        .count();
    assert_eq!(item_lines, 51);
    assert!(body.contains("check suite: pass"));

    let json = roughlat(&[
        "check",
        &testdata("two_block_equivalence.json"),
        "suite",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(value["suite"]["items"].as_array().unwrap().len(), 51);
    assert_eq!(value["suite"]["failed"], 0);
}

#[test]
fn check_element_adds_the_analysis_section() {
    let out = roughlat(&[
        "check",
        &testdata("staircase.json"),
        "sharp",
        "--element",
        "a:ab",
    ]);
    assert_eq!(code_of(&out), 0);
    let body = stdout_of(&out);
    assert!(body.contains("element ["));
    assert!(body.contains("sharp: true"));

    let missing = roughlat(&[
        "check",
        &testdata("staircase.json"),
        "sharp",
        "--element",
        "b:b",
    ]);
    assert_eq!(code_of(&missing), 2);
    assert!(String::from_utf8_lossy(&missing.stderr).contains("not a member"));
}

#[test]
fn cap_exceeded_uses_exit_code_three() {
    let out = roughlat(&["mine", "--n", "5", "--exhaustive"]);
    assert_eq!(code_of(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn parse_and_usage_errors_use_exit_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"universe\": [\"a\"], \"pairs\": [[\"a\", \"z\"]]}").unwrap();
    let out = roughlat(&["rs", bad.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);

    let missing = roughlat(&["rs", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(code_of(&missing), 2);

    let unknown_verb = roughlat(&["frobnicate"]);
    assert_eq!(code_of(&unknown_verb), 2);

    let unknown_property = roughlat(&["check", &testdata("staircase.json"), "frobnicate"]);
    assert_eq!(code_of(&unknown_property), 2);

    let no_mode = roughlat(&["mine", "--n", "3"]);
    assert_eq!(code_of(&no_mode), 2);
}

#[test]
fn dot_targets_render_and_are_deterministic() {
    for target in ["rs", "dm", "center"] {
        let out = roughlat(&["dot", &testdata("path_tolerance.json"), "--target", target]);
        assert_eq!(code_of(&out), 0, "target {target}");
        assert!(stdout_of(&out).starts_with("digraph"), "target {target}");
    }
    let clopen = roughlat(&[
        "dot",
        &testdata("two_block_equivalence.json"),
        "--target",
        "clopen",
        "--neg",
        "pseudocomplement",
    ]);
    assert_eq!(code_of(&clopen), 0);
    assert!(stdout_of(&clopen).starts_with("digraph"));

    let clopen_without_neg =
        roughlat(&["dot", &testdata("two_block_equivalence.json"), "--target", "clopen"]);
    assert_eq!(code_of(&clopen_without_neg), 2);

    let first = roughlat(&["dot", &testdata("path_tolerance.json"), "--target", "dm"]);
    let second = roughlat(&["dot", &testdata("path_tolerance.json"), "--target", "dm"]);
    assert_eq!(first.stdout, second.stdout);
    let body = stdout_of(&first);
    assert_eq!(body.matches("shape=box").count(), 2, "two completion-added nodes are boxed");
}

#[test]
fn mine_exhaustive_and_filtered_counts() {
    let out = roughlat(&["mine", "--n", "3", "--exhaustive"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out)
        .contains("mined 64 relations on 3 elements (0 filtered out, 64 checked): 0 with failures"));

    let filtered = roughlat(&["mine", "--n", "3", "--exhaustive", "--filter", "equivalence"]);
    assert_eq!(code_of(&filtered), 0);
    assert!(stdout_of(&filtered).contains("(59 filtered out, 5 checked)"));
}

#[test]
fn mine_sampling_is_deterministic_per_seed() {
    let args = ["mine", "--n", "5", "--sample", "10", "--seed", "7", "--format", "json"];
    let first = roughlat(&args);
    let second = roughlat(&args);
    assert_eq!(code_of(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let other_seed =
        roughlat(&["mine", "--n", "5", "--sample", "10", "--seed", "8", "--format", "json"]);
    assert_ne!(first.stdout, other_seed.stdout);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = roughlat(&[
        "dm",
        &testdata("staircase.json"),
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(value["dm"]["size"], 8);
}

#[test]
fn repeated_json_reports_are_byte_identical() {
    let args = ["check", &testdata("path_tolerance.json"), "suite", "--format", "json"];
    let first = roughlat(&args);
    let second = roughlat(&args);
    assert_eq!(code_of(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}
