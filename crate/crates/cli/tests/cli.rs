//! End-to-end command coverage through the built binary: verdicts, JSON
//! determinism, exit codes, and input diagnostics.

use std::io::Write;
use std::process::{Command, Output};

fn chowkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chowkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).to_string()
}

#[test]
fn monad_verify_at_two_reports_the_half_integer() {
    let out = chowkit(&["monad-verify", "--a", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("excluded_by_integrality"));
    assert!(text.contains("chi_E = -3/2"));

    let out = chowkit(&["monad-verify", "--a", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["conclusion"], "excluded_by_integrality");
    assert_eq!(v["chi_e"], "-3/2");
    assert_eq!(v["b"], "2");
}

#[test]
fn monad_verify_rejects_bad_parameters() {
    let out = chowkit(&["monad-verify", "--a", "-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chowkit(&["monad-verify", "--a", "1", "--a-max", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chowkit(&["monad-verify", "--a-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn monad_verify_range_lists_every_verdict() {
    let out = chowkit(&["monad-verify", "--a-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("a =   2: excluded_by_integrality"));
    assert!(text.contains("a =   8: not_excluded"));
    assert!(text.contains("excluded: 10 of 12"));
}

#[test]
fn selftest_reports_the_pinned_divergences_and_exits_one() {
    let out = chowkit(&["selftest"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failing: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("FAIL"))
        .collect();
    assert_eq!(failing.len(), 4);
    for name in [
        "monad.twist_e4_display",
        "monad.chi_sum_display",
        "monad.phi_display",
        "monad.phi_roots",
    ] {
        assert!(
            failing.iter().any(|l| l.contains(name)),
            "missing {name} in {failing:?}"
        );
    }
    assert!(stderr(&out).contains("golden check(s) diverge"));
}

#[test]
fn json_outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["q-ring", "--json"],
        vec!["selftest", "--json"],
        vec!["monad-verify", "--json"],
        vec!["chi", "--json"],
        vec!["todd", "--variety", "p2", "--json"],
        vec!["schubert-mult", "--k", "2", "--n", "5", "--lhs", "2,1", "--rhs", "1", "--json"],
    ] {
        let first = chowkit(&args);
        let second = chowkit(&args);
        assert_eq!(stdout(&first), stdout(&second), "{args:?}");
        assert!(!stdout(&first).is_empty());
    }
}

#[test]
fn schubert_mult_computes_and_validates() {
    let out = chowkit(&["schubert-mult", "--k", "2", "--n", "4", "--lhs", "1", "--rhs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("s[1,1] + s[2]"));

    let out = chowkit(&["schubert-mult", "--k", "2", "--n", "4", "--lhs", "7", "--rhs", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chowkit(&["schubert-mult", "--k", "0", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = chowkit(&["schubert-mult", "--k", "2", "--n", "4", "--lhs", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chain_check_end_to_end() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("chain.json");
    let mut file = std::fs::File::create(&path).expect("create");
    write!(
        file,
        r#"{{"degrees":[2,2,2],"matrices":[[[3,1],[1,3]],[[3,1],[1,3]],[[3,1],[1,3]]]}}"#
    )
    .expect("write");

    let out = chowkit(&["chain-check", "--spec", path.to_str().unwrap(), "--bound", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["degree_product"], 8);
    assert_eq!(v["eigen_valid"], true);
    let roots = v["c2_roots"].as_array().unwrap();
    assert!(roots.contains(&serde_json::json!([64, 64])));
    assert!(roots.contains(&serde_json::json!([8, -8])));

    // Horizon truncates the chain before analysis.
    let out = chowkit(&[
        "chain-check",
        "--spec",
        path.to_str().unwrap(),
        "--bound",
        "1",
        "--horizon",
        "1",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["degree_product"], 2);

    // Malformed specs name the offending field and exit 2.
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"degrees":[2],"matrices":[[[9,1],[1,3]]]}"#).expect("write");
    let out = chowkit(&["chain-check", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("matrices[0]"));

    let out = chowkit(&["chain-check", "--spec", "/nonexistent/chain.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chi_subcommand_evaluates() {
    let out = chowkit(&["chi"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("chi_E   = 1/12*a^2 - 23/12*a + 2"));
    let out = chowkit(&["chi", "--a", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(v["chi_e0"], "9/2");
}

#[test]
fn todd_rejects_unknown_varieties() {
    let out = chowkit(&["todd", "--variety", "p3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("p3"));
}
