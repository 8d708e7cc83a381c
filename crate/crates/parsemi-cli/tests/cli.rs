//! End-to-end checks of the binary: exit codes, report formats, dumps and
//! byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn parsemi(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parsemi"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) {
    std::fs::write(dir.join(name), content).unwrap();
}

const Z2_SG: &str = "n 2\nunit 0\n0 1\n1 0\n";
const CHAIN2_SG: &str = "n 2\nunit 1\n0 0\n0 1\n";
const FIELD_ALG: &str = "dim 1\nunit 1\n0 0 0 1\n";

#[test]
fn theorem_2_7_command_passes_on_z2() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "z2.sg", Z2_SG);
    let out = parsemi(dir.path(), &["check-thm-2.7", "--semigroup", "z2.sg"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dim K_par = 3"));
    assert!(stdout.contains("dim K_par/J = 3"));
    assert!(stdout.contains("dim crossed product = 3"));
    assert!(stdout.trim_end().ends_with("status: pass"));
}

#[test]
fn failing_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "leftzero.sg", "n 2\n0 0\n1 1\n");
    let out = parsemi(dir.path(), &["verify-semigroup", "--semigroup", "leftzero.sg"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("check idempotents commute: fail"));
    assert!(stdout.contains("status: fail"));
}

#[test]
fn cap_exceeded_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "z2.sg", Z2_SG);
    let out = parsemi(dir.path(), &["build-pr", "--semigroup", "z2.sg", "--cap", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("status: cap_exceeded"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    // unknown subcommand (clap) and missing required input (ours)
    assert_eq!(parsemi(dir.path(), &["no-such-command"]).status.code(), Some(2));
    assert_eq!(parsemi(dir.path(), &["check-thm-2.7"]).status.code(), Some(2));
    // unreadable and malformed inputs are usage-class failures
    assert_eq!(
        parsemi(dir.path(), &["check-thm-2.7", "--semigroup", "missing.sg"]).status.code(),
        Some(2)
    );
    write(dir.path(), "bad.sg", "n 2\n0 7\n1 0\n");
    let out = parsemi(dir.path(), &["check-thm-2.7", "--semigroup", "bad.sg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn json_reports_follow_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "z2.sg", Z2_SG);
    let out = parsemi(
        dir.path(),
        &["check-thm-2.7", "--semigroup", "z2.sg", "--format", "json", "--report", "r.json"],
    );
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(parsed["command"], "check-thm-2.7");
    assert_eq!(parsed["status"], "pass");
    assert!(parsed["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "pass"));
    assert_eq!(parsed["dims"]["K_par/J"], 3);
    // --report writes exactly what stdout carries
    let report = std::fs::read_to_string(dir.path().join("r.json")).unwrap();
    assert_eq!(report, stdout);
}

#[test]
fn crossed_product_dump_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "chain2.sg", CHAIN2_SG);
    write(dir.path(), "f.alg", FIELD_ALG);
    write(
        dir.path(),
        "t.act",
        "semigroup chain2.sg\nalgebra f.alg\nideal 0: 1\nmap 0: 1\nideal 1: 1\nmap 1: 1\n",
    );
    let out = parsemi(
        dir.path(),
        &["crossed-product", "--action", "t.act", "--out", "quotient.alg"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("dim L = 2"));
    assert!(stdout.contains("dim I = 1"));
    assert!(stdout.contains("dim quotient = 1"));
    let dumped = std::fs::read_to_string(dir.path().join("quotient.alg")).unwrap();
    let parsed = parsemi::textio::parse_algebra(&dumped).unwrap();
    assert_eq!(parsed.dim(), 1);
    assert!(parsed.unit().is_some());
}

#[test]
fn expansion_dump_is_reusable() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "z2.sg", Z2_SG);
    let out = parsemi(dir.path(), &["build-pr", "--semigroup", "z2.sg", "--out", "pr.sg"]);
    assert_eq!(out.status.code(), Some(0));
    // the dumped expansion is itself a valid unital inverse semigroup file
    let verify = parsemi(dir.path(), &["verify-semigroup", "--semigroup", "pr.sg"]);
    assert_eq!(verify.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("pr.sg")).unwrap();
    assert!(text.starts_with("n 3\nunit 0\n"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "z2.sg", Z2_SG);
    for args in [
        vec!["corpus", "--seed", "7", "--corpus-size", "10"],
        vec!["corpus", "--seed", "7", "--corpus-size", "10", "--format", "json"],
        vec!["check-thm-2.7", "--semigroup", "z2.sg", "--format", "json"],
    ] {
        let first = parsemi(dir.path(), &args);
        let second = parsemi(dir.path(), &args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
    // different seed, different bytes
    let a = parsemi(dir.path(), &["corpus", "--seed", "7", "--corpus-size", "10"]);
    let b = parsemi(dir.path(), &["corpus", "--seed", "8", "--corpus-size", "10"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn lemma_commands_on_generated_files() {
    let dir = tempfile::tempdir().unwrap();
    // Wagner–Preston of chain(2) written as instance files
    write(dir.path(), "chain2.sg", CHAIN2_SG);
    let m2 = parsemi::textio::algebra_to_text(&parsemi::algebra::StructureAlgebra::matrix_algebra(2));
    write(dir.path(), "m2.alg", &m2);
    write(
        dir.path(),
        "wp.rep",
        "semigroup chain2.sg\nalgebra m2.alg\nrep 0: 1 0 0 0\nrep 1: 1 0 0 1\n",
    );
    for cmd in ["verify-rep", "check-lemma-2.3", "check-lemma-2.4", "check-prop-2.5"] {
        let out = parsemi(dir.path(), &[cmd, "--rep", "wp.rep"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stdout));
    }

    write(dir.path(), "f.alg", FIELD_ALG);
    write(
        dir.path(),
        "t.act",
        "semigroup chain2.sg\nalgebra f.alg\nideal 0: 1\nmap 0: 1\nideal 1: 1\nmap 1: 1\n",
    );
    for cmd in ["verify-action", "check-thm-1.1", "check-cor-1.2", "check-lemma-2.1"] {
        let out = parsemi(dir.path(), &[cmd, "--action", "t.act"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stdout));
    }

    let out = parsemi(
        dir.path(),
        &["check-cor-1.4", "--algebra", "m2.alg", "--corpus-size", "20", "--seed", "7"],
    );
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.matches("check associative: ").count(), 20, "20 associative verdicts");
}
