//! End-to-end tests of the installed binary: file handling, exit codes,
//! output stability, and the round trip from emitted JSON back into the
//! parser.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const CUSP: &str = r#"{"format":"lct-kit/1","n":2,"generators":[[2,0],[0,3]]}"#;

fn run_env(args: &[&str], dir: &Path, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lct-kit"));
    cmd.args(args).current_dir(dir);
    for (key, value) in env {
        cmd.env(key, value);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str], dir: &Path) -> Output {
    run_env(args, dir, &[])
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

fn write(dir: &Path, name: &str, content: &str) {
    fs::write(dir.join(name), content).unwrap();
}

#[test]
fn threshold_command_prints_the_exact_rational() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "cusp.json", CUSP);
    let out = run(&["lct", "cusp.json"], dir.path());
    assert!(out.status.success());
    assert_eq!(text(&out.stdout).trim(), "5/6");
    assert!(out.stderr.is_empty());
}

#[test]
fn bad_inputs_exit_with_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "cusp.json", CUSP);
    write(dir.path(), "bad.json", "{");

    let missing = run(&["lct", "absent.json"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
    assert!(text(&missing.stderr).starts_with("error:"));

    let malformed = run(&["lct", "bad.json"], dir.path());
    assert_eq!(malformed.status.code(), Some(2));
    assert!(text(&malformed.stderr).contains("malformed JSON"));

    let exponent = run(&["mult-ideal", "cusp.json", "--c", "x"], dir.path());
    assert_eq!(exponent.status.code(), Some(2));

    let suite = run(&["verify", "--suite", "nonsense"], dir.path());
    assert_eq!(suite.status.code(), Some(2));
    assert!(text(&suite.stderr).contains("unknown suite"));

    let mixed_degrees = run(&["cone-bound", "cusp.json"], dir.path());
    assert_eq!(mixed_degrees.status.code(), Some(2));
    assert!(text(&mixed_degrees.stderr).contains("--degree"));
}

#[test]
fn emitted_multiplier_ideal_feeds_back_into_other_verbs() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "cusp.json", CUSP);
    let out = run(&["mult-ideal", "cusp.json", "--c", "5/6"], dir.path());
    assert!(out.status.success());
    let emitted = text(&out.stdout);
    assert_eq!(emitted.lines().count(), 1);
    write(dir.path(), "mult.json", emitted.trim());

    let threshold = run(&["lct", "mult.json"], dir.path());
    assert!(threshold.status.success());
    assert_eq!(text(&threshold.stdout).trim(), "2");

    let colength = run(&["colength", "mult.json"], dir.path());
    assert!(colength.status.success());
    assert_eq!(text(&colength.stdout).trim(), "1");
}

#[test]
fn newton_json_reports_exact_geometry() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "cusp.json", CUSP);
    let out = run(&["newton", "--json", "cusp.json"], dir.path());
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["lct"], "5/6");
    assert_eq!(report["zero_dimensional"], true);
    assert_eq!(report["covolume"], "3");
    assert_eq!(report["samuel_multiplicity"], "6");
    let normals: Vec<&serde_json::Value> = report["facets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| &f["normal"])
        .collect();
    assert!(normals.contains(&&serde_json::json!(["1/2", "1/3"])));

    let again = run(&["newton", "--json", "cusp.json"], dir.path());
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_output_is_stable_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--suite",
        "divisor-bounds",
        "--trials",
        "40",
        "--seed",
        "9",
        "--json",
    ];
    let single = run_env(&args, dir.path(), &[("LCT_KIT_THREADS", "1")]);
    let pooled = run_env(&args, dir.path(), &[("LCT_KIT_THREADS", "4")]);
    assert!(single.status.success());
    assert!(pooled.status.success());
    assert_eq!(single.stdout, pooled.stdout);

    let report: serde_json::Value = serde_json::from_slice(&single.stdout).unwrap();
    assert_eq!(report["ok"], true);
    assert_eq!(report["failed"], 0);
    assert_eq!(
        report["passed"].as_u64().unwrap() + report["skipped"].as_u64().unwrap(),
        40
    );
}

#[test]
fn strict_mode_rejects_non_minimal_generators() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "redundant.json",
        r#"{"n":2,"generators":[[1,0],[2,1]]}"#,
    );
    let lenient = run(&["lct", "redundant.json"], dir.path());
    assert!(lenient.status.success());
    assert_eq!(text(&lenient.stdout).trim(), "1");
    assert!(text(&lenient.stderr).contains("warning"));

    let strict = run(&["lct", "--strict", "redundant.json"], dir.path());
    assert_eq!(strict.status.code(), Some(2));
    assert!(text(&strict.stderr).starts_with("error:"));
}

#[test]
fn pair_with_negative_weight_is_not_log_terminal() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "pair.json",
        r#"{"n":2,"generators":[[2,0],[0,3]],"b":["0","-1/2"],"mu":"9/10"}"#,
    );
    let out = run(&["pair-lt", "pair.json"], dir.path());
    assert!(out.status.success());
    assert_eq!(text(&out.stdout).trim(), "not log terminal");

    let json = run(&["pair-lt", "--json", "pair.json"], dir.path());
    let report: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(report["log_terminal"], false);
}

#[test]
fn replay_reports_each_outcome() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "pass.json",
        r#"{"kind":"oracle-lct","ideal":{"n":2,"generators":[[2,0],[0,3]]}}"#,
    );
    let pass = run(&["verify", "--replay", "pass.json"], dir.path());
    assert!(pass.status.success());
    assert_eq!(text(&pass.stdout).trim(), "passed");

    write(
        dir.path(),
        "skip.json",
        r#"{"kind":"divisor","ideal":{"n":2,"generators":[[2,0],[0,3]]},"b":"0","mu":"13/10"}"#,
    );
    let skip = run(&["verify", "--replay", "skip.json"], dir.path());
    assert!(skip.status.success());
    assert_eq!(text(&skip.stdout).trim(), "skipped");

    write(
        dir.path(),
        "fail.json",
        r#"{"kind":"multiplier","ideal":{"n":2,"generators":[[2,0],[0,3]]},"cs":["2","1/3"]}"#,
    );
    let fail = run(&["verify", "--replay", "fail.json"], dir.path());
    assert_eq!(fail.status.code(), Some(1));
    assert!(text(&fail.stdout).starts_with("failed: monotonicity"));
}

#[test]
fn jets_profile_names_the_threshold() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "cusp.json", CUSP);
    let out = run(&["jets", "cusp.json"], dir.path());
    assert!(out.status.success());
    let stdout = text(&out.stdout);
    assert!(stdout.contains("witness"));
    assert!(stdout.trim_end().ends_with("lct: 5/6"));

    let capped = run(&["jets", "cusp.json", "--m-max", "3"], dir.path());
    assert!(capped.status.success());
    let capped_out = text(&capped.stdout);
    assert_eq!(capped_out.lines().count(), 4);
    assert!(capped_out.trim_end().ends_with("lct: 1"));
}

#[test]
fn cone_bound_infers_the_degree() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "cubes.json",
        r#"{"n":3,"generators":[[3,0,0],[0,3,0],[0,0,3]]}"#,
    );
    let out = run(&["cone-bound", "cubes.json"], dir.path());
    assert!(out.status.success());
    let stdout = text(&out.stdout);
    assert!(stdout.contains("degree: 3"));
    assert!(stdout.contains("c: 1"));
    assert!(stdout.contains("e: 3"));
    assert!(stdout.contains("equality: true"));
    assert!(stdout.contains("restricted ok: true"));
}

#[test]
fn family_and_rigidity_tables_print_frozen_rows() {
    let dir = tempfile::tempdir().unwrap();
    let example = run(
        &["example", "--family", "power", "--k", "3", "--t-max", "2"],
        dir.path(),
    );
    assert!(example.status.success());
    let rows = text(&example.stdout);
    let mut lines = rows.lines();
    assert_eq!(lines.next(), Some("k t c length bound pushforward ratio"));
    assert_eq!(lines.next(), Some("3 1 3 1 6 1 6"));
    assert_eq!(lines.next(), Some("3 2 3/2 4 3/4 1/4 3"));

    let rigidity = run(&["rigidity", "--n-min", "4", "--n-max", "13"], dir.path());
    assert!(rigidity.status.success());
    let table = text(&rigidity.stdout);
    assert!(table.contains("4 low 4 1/4 0 true"));
    assert!(table.contains("12 high 12 1/4 0 true"));
    assert!(table.contains("13 high 13 3/13 -1/13 false"));
}

#[test]
fn samuel_needs_a_zero_dimensional_ideal() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "edge.json", r#"{"n":2,"generators":[[1,1]]}"#);
    let out = run(&["samuel", "edge.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).starts_with("error:"));

    write(dir.path(), "point.json", CUSP);
    let ok = run(&["samuel", "point.json"], dir.path());
    assert!(ok.status.success());
    assert_eq!(text(&ok.stdout).trim(), "6");
}
