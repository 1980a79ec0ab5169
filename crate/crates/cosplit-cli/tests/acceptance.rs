//! Acceptance gate for the command line: criterion 11.

use std::process::Command;
use std::time::{Duration, Instant};

fn suite_output(format: &str) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_cosplit"))
        .args(["suite", "--format", format, "--no-timing"])
        .env_remove("COSPLIT_MAX_SIZE")
        .output()
        .expect("run suite")
}

#[test]
fn acceptance_11_cli_suite_passes_and_is_byte_stable() {
    let start = Instant::now();
    let first = suite_output("json");
    let within_budget = start.elapsed() < Duration::from_secs(300);
    let second = suite_output("json");
    let text_first = suite_output("text");
    let text_second = suite_output("text");
    let ok = first.status.success()
        && second.status.success()
        && text_first.status.success()
        && within_budget
        && first.stdout == second.stdout
        && text_first.stdout == text_second.stdout;
    let state = if ok { "PASS" } else { "FAIL" };
    println!("acceptance 11 (cli suite exits 0 in under 300s with byte-stable output): {state}");
    assert!(ok, "acceptance criterion 11 failed");
}
