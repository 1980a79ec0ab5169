//! Behavior tests for the command-line surface.

use serde_json::Value;
use std::process::{Command, Output};

fn cosplit(args: &[&str], cap: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cosplit"));
    cmd.args(args);
    match cap {
        Some(v) => cmd.env("COSPLIT_MAX_SIZE", v),
        None => cmd.env_remove("COSPLIT_MAX_SIZE"),
    };
    cmd.output().expect("run cosplit")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json on stdout")
}

#[test]
fn verify_sl_passes_and_reports_schema() {
    let out = cosplit(
        &[
            "verify",
            "sl",
            "--size",
            "3",
            "--format",
            "json",
            "--no-timing",
        ],
        None,
    );
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "cosplit-report/1");
    assert_eq!(v["kind"], "target");
    assert_eq!(v["target"], "sl_3");
    assert_eq!(v["verdict"]["kind"], "cosplit");
    assert_eq!(v["scalars"]["killing_ratio"], "1/6");
    assert_eq!(v["duality"]["iso_B"], true);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["ok"] == true));
}

#[test]
fn verify_classical_reports_embedding_and_scalar() {
    let out = cosplit(
        &[
            "verify",
            "classical",
            "--family",
            "D",
            "--rank",
            "3",
            "--format",
            "json",
            "--no-timing",
        ],
        None,
    );
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["target"], "D3");
    assert_eq!(v["embedding"]["family"], "D");
    assert_eq!(v["embedding"]["ambient"], 6);
    assert_eq!(v["embedding"]["dim"], 15);
    assert_eq!(v["embedding"]["complement_dim"], 20);
    assert_eq!(v["scalar"]["c_direct"], "1/3");
    assert_eq!(v["scalar"]["c_formula"], "1/3");
    assert_eq!(v["scalar"]["agree"], true);
    assert_eq!(v["verdict"]["kind"], "weak");
}

#[test]
fn timing_is_present_unless_suppressed() {
    let with = cosplit(&["verify", "sl", "--size", "2", "--format", "json"], None);
    assert!(stdout_json(&with).get("elapsed_ms").is_some());
    let without = cosplit(
        &[
            "verify",
            "sl",
            "--size",
            "2",
            "--format",
            "json",
            "--no-timing",
        ],
        None,
    );
    assert!(stdout_json(&without).get("elapsed_ms").is_none());
}

#[test]
fn invalid_targets_exit_with_usage_code() {
    for args in [
        &["verify", "sl", "--size", "1"][..],
        &["verify", "classical", "--family", "D", "--rank", "2"][..],
        &["verify", "classical", "--family", "B", "--rank", "0"][..],
    ] {
        let out = cosplit(args, None);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn size_cap_rejects_oversized_targets() {
    let out = cosplit(&["verify", "sl", "--size", "9"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = cosplit(&["verify", "sl", "--size", "5"], Some("4"));
    assert_eq!(out.status.code(), Some(2));
    let out = cosplit(
        &["verify", "classical", "--family", "D", "--rank", "4"],
        Some("6"),
    );
    assert_eq!(out.status.code(), Some(2));
    let out = cosplit(&["suite"], Some("not-a-number"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suite_lists_twelve_targets_by_default() {
    let out = cosplit(&["suite", "--format", "json", "--no-timing"], None);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "cosplit-report/1");
    assert_eq!(v["kind"], "suite");
    assert_eq!(v["passed"], true);
    let targets = v["targets"].as_array().unwrap();
    let names: Vec<&str> = targets
        .iter()
        .map(|t| t["target"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["sl_2", "sl_3", "sl_4", "sl_5", "sl_6", "B1", "B2", "B3", "C2", "C3", "D3", "D4"]
    );
}

#[test]
fn size_cap_filters_the_suite() {
    let out = cosplit(&["suite", "--format", "json", "--no-timing"], Some("4"));
    assert!(out.status.success());
    let v = stdout_json(&out);
    let names: Vec<&str> = v["targets"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["target"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["sl_2", "sl_3", "sl_4", "B1", "C2"]);
}

#[test]
fn text_output_marks_passing_targets() {
    let out = cosplit(
        &[
            "verify",
            "classical",
            "--family",
            "C",
            "--rank",
            "1",
            "--no-timing",
        ],
        None,
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("target C1 (dim 3)"));
    assert!(text.contains("  verdict cosplit"));
    assert!(text.ends_with("  result pass\n"));
    assert!(!text.contains("time"));
}
