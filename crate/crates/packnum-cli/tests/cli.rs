//! End-to-end checks of the command-line binary: exit codes, output
//! shapes, and determinism.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_packnum"));
    cmd.env_remove("PACKNUM_BUDGET");
    cmd
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn invariants_reports_known_values() {
    let out = run_with_stdin(&["invariants", "-"], "Dhc\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("ω=2 χ=3 α=2 χ_ρ=4"), "got: {text}");
}

#[test]
fn invariants_empty_input_is_fine() {
    let out = run_with_stdin(&["invariants", "-", "--format", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).trim(), "[]");
}

#[test]
fn malformed_line_exits_three_with_line_number() {
    let out = run_with_stdin(&["invariants", "-"], "Bw\n@@%\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains(":2:"), "got: {}", stderr_of(&out));
}

#[test]
fn gen_emits_expected_graphs() {
    let cycle = bin().args(["gen", "--family", "cycle", "--n", "5"]).output().unwrap();
    assert_eq!(cycle.status.code(), Some(0));
    assert_eq!(stdout_of(&cycle).trim(), "Dhc");

    let myc = bin()
        .args(["gen", "--family", "mycielski-power", "--n", "2", "--k", "2"])
        .output()
        .unwrap();
    assert_eq!(myc.status.code(), Some(0));
    let line = stdout_of(&myc);
    let g = packnum::parse_graph6(line.trim()).unwrap();
    assert_eq!(g.n(), 11);

    let hclass = bin()
        .args(["gen", "--family", "hclass", "--r", "3", "--s", "2"])
        .output()
        .unwrap();
    let g = packnum::parse_graph6(stdout_of(&hclass).trim()).unwrap();
    assert_eq!(g.n(), 5);
}

#[test]
fn gen_rejects_bad_parameters() {
    let small = bin().args(["gen", "--family", "cycle", "--n", "2"]).output().unwrap();
    assert_eq!(small.status.code(), Some(3));
    assert!(stderr_of(&small).contains("at least 3"));

    let unknown = bin().args(["gen", "--family", "torus", "--n", "5"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(3));

    let missing = bin().args(["gen", "--family", "g-k-ell", "--k", "3"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(3));
    assert!(stderr_of(&missing).contains("--ell"));
}

#[test]
fn packing_handles_fixed_radii() {
    let feasible = run_with_stdin(&["packing", "-", "--spec", "1,1,2"], "DqK\n");
    assert_eq!(feasible.status.code(), Some(0));
    assert!(stdout_of(&feasible).contains("colors=3"));

    let odd_cycle_needs_three = run_with_stdin(&["packing", "-", "--spec", "1,1"], "DqK\n");
    assert_eq!(odd_cycle_needs_three.status.code(), Some(0));
    assert!(stdout_of(&odd_cycle_needs_three).contains("infeasible"));

    let infeasible = run_with_stdin(&["packing", "-", "--spec", "2,3,4,5"], "DqK\n");
    assert_eq!(infeasible.status.code(), Some(0));
    assert!(stdout_of(&infeasible).contains("infeasible"));

    let bad = run_with_stdin(&["packing", "-", "--spec", "3,1"], "DqK\n");
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn mycielski_json_reports_construction() {
    let out = run_with_stdin(
        &["mycielski", "-", "--bounds", "--format", "json"],
        "Ch\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let rec = &value[0];
    assert_eq!(rec["result_order"], 9);
    assert_eq!(rec["alpha_mycielskian"], 4);
    assert_eq!(rec["bounds"]["chi_rho_myc"], 5);
}

#[test]
fn scan_small_corpus_passes_and_is_deterministic() {
    let run = |jobs: &str| {
        let out = bin()
            .args([
                "scan", "--check", "all", "--max-n", "5", "--format", "json", "--jobs", jobs,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(run("1"), run("7"));
}

#[test]
fn scan_rejects_unknown_check() {
    let out = bin()
        .args(["scan", "--check", "bogus", "--max-n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("bogus"));
}

#[test]
fn scan_reads_external_corpus() {
    let out = run_with_stdin(
        &["scan", "--check", "indep-upper", "--input", "-", "--format", "json"],
        "Bw\nDhc\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["corpus_size"], 2);
    assert_eq!(value["checks"][0]["status"], "VERIFIED_ON_CORPUS");
    assert!(value.get("m_table").is_none());
}

#[test]
fn scan_pattern_hits_exit_two() {
    let found = bin()
        .args(["scan", "--pattern", "2,3,4", "--max-n", "5", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(found.status.code(), Some(2));
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8(found.stdout).unwrap()).unwrap();
    assert_eq!(value["found"]["graph6"], "DqK");

    let miss = bin()
        .args(["scan", "--pattern", "5,6,7", "--max-n", "5"])
        .output()
        .unwrap();
    assert_eq!(miss.status.code(), Some(0));
}

#[test]
fn tiny_budget_reports_undecided() {
    let out = bin()
        .args([
            "scan", "--check", "chi-eq-rho-clique", "--max-n", "6", "--budget", "3", "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(!value["undecided"].as_array().unwrap().is_empty());
}

#[test]
fn budget_env_and_flag_are_validated() {
    let zero = bin()
        .args(["scan", "--max-n", "4", "--budget", "0"])
        .output()
        .unwrap();
    assert_eq!(zero.status.code(), Some(3));

    let env = bin()
        .args(["scan", "--check", "stars-222", "--max-n", "4", "--format", "json"])
        .env("PACKNUM_BUDGET", "987654")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(0));
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8(env.stdout).unwrap()).unwrap();
    assert_eq!(value["budget"], 987654);
}

#[test]
fn mtable_lists_all_rows() {
    let out = bin().args(["mtable", "--format", "json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 21);
}

#[test]
fn corpus_counts_match_enumeration() {
    let out = bin().args(["corpus", "--order", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 112);
    for line in text.lines().take(5) {
        packnum::parse_graph6(line).unwrap();
    }

    let both = bin().args(["corpus"]).output().unwrap();
    assert_eq!(both.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_three() {
    let out = bin().args(["invariants", "--nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}
