use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_distseries"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        status.code().expect("exited normally"),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn normalize_expands_products() {
    let (code, out, _) = run(&["normalize", "--theory", "ring3", "(a+b)*(c+d)"]);
    assert_eq!(code, 0);
    assert_eq!(out, "a*c + a*d + b*c + b*d\n");
}

#[test]
fn normalize_keeps_word_order_in_ring3_only() {
    let (_, nc, _) = run(&["normalize", "--theory", "ring3", "b*a - a*b"]);
    let (_, c, _) = run(&["normalize", "--theory", "ring2", "b*a - a*b"]);
    assert_eq!(nc, "-a*b + b*a\n");
    assert_eq!(c, "0\n");
}

#[test]
fn normalize_with_an_explicit_carrier() {
    let (code, out, _) = run(&["normalize", "--theory", "rig", "--names", "y,x", "x*0 + y*1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "y\n");
    let (code, _, _) = run(&["normalize", "--theory", "rig", "--generators", "1", "b"]);
    assert_eq!(code, 1);
}

#[test]
fn normalization_errors_exit_one() {
    let (code, _, err) = run(&["normalize", "--theory", "rig", "-a"]);
    assert_eq!(code, 1);
    assert!(err.is_empty());
    let (code, out, _) = run(&["normalize", "--theory", "ring3", "(a+"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error: syntax error"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["normalize", "--theory", "field", "a"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["laws", "--monad", "Nope"]).0, 2);
    assert_eq!(run(&["distlaw", "--law", "ring9(2,1)"]).0, 2);
    assert_eq!(run(&["yang-baxter", "--theory", "ring3", "--triple", "1,2,3"]).0, 2);
    assert_eq!(run(&["yang-baxter", "--theory", "ring3", "--triple", "3,2"]).0, 2);
    assert_eq!(run(&["laws", "--generators", "2", "--names", "a,b"]).0, 2);
}

#[test]
fn series_summary() {
    let (code, out, _) = run(&["series", "--theory", "rig", "--bound", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("PASS: 4 monads, 6 laws, 4 YB triples"));
    assert!(out.lines().filter(|l| l.starts_with("CHECK ")).all(|l| l.ends_with(" PASS")));
    let (_, out, _) = run(&["series", "--theory", "ring3", "--bound", "2"]);
    assert_eq!(out.lines().last(), Some("PASS: 3 monads, 3 laws, 1 YB triples"));
}

#[test]
fn output_is_deterministic() {
    let args = ["distlaw", "--law", "all", "--bound", "2"];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(run(&args).1, first);
}

#[test]
fn broken_monad_reports_a_witness() {
    let (code, out, _) = run(&["laws", "--monad", "DropLastMonoid", "--bound", "2"]);
    assert_eq!(code, 1);
    let fail = out.lines().find(|l| l.contains(" FAIL ")).expect("a failing line");
    assert!(fail.starts_with("CHECK DropLastMonoid/"), "{fail}");
    assert!(fail.contains(" witness="), "{fail}");
    assert!(out.lines().last().unwrap().starts_with("FAIL: "));
}

#[test]
fn negative_control_laws_fail() {
    for law in ["identity-pseudo", "to-zero"] {
        let (code, out, _) = run(&["distlaw", "--law", law, "--bound", "2"]);
        assert_eq!(code, 1, "{law}");
        assert!(out.contains(&format!("CHECK {law}/")), "{out}");
    }
}

#[test]
fn zoo_laws_pass() {
    let (code, out, _) = run(&["laws", "--bound", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().last().unwrap().starts_with("PASS: "));
}

#[test]
fn routes_all_and_one() {
    let (code, out, _) = run(&["routes", "--theory", "rig", "--bound", "2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("CHECK route[")).count(), 4);
    let (code, out, _) = run(&["routes", "--theory", "rig", "--route", "((1,2),(3,4))", "--bound", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("CHECK route[((1,2),(3,4))] PASS"), "{out}");
    assert_eq!(run(&["routes", "--theory", "rig", "--route", "((1,2),3)"]).0, 2);
}

#[test]
fn ncat_counts_a_single_two_cell() {
    let input = data("two_cell.gset");
    let (code, out, _) = run(&["ncat", "--input", input.to_str().unwrap(), "--compare-oracle"]);
    assert_eq!(code, 0);
    // x, y; f, g and two identities; alpha and four identities
    assert_eq!(out, "dim 0: 2\ndim 1: 4\ndim 2: 5\nORACLE MATCH\n");
}

#[test]
fn oracle_compare_on_a_loop() {
    let input = data("loop.gset");
    let (code, out, _) = run(&["oracle-compare", "--input", input.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("ORACLE MATCH\n"));
    let ncat: Vec<&str> = out.lines().filter_map(|l| l.strip_prefix("ncat ")).collect();
    let oracle: Vec<&str> = out.lines().filter_map(|l| l.strip_prefix("oracle ")).collect();
    assert_eq!(ncat, oracle);
    assert_eq!(ncat[..2], ["dim 0: 1", "dim 1: 3"]);
}

#[test]
fn malformed_files_exit_two() {
    for name in ["not_globular.gset", "truncated.gset", "missing.gset"] {
        let (code, out, err) = run(&["ncat", "--input", data(name).to_str().unwrap()]);
        assert_eq!(code, 2, "{name}");
        assert!(out.is_empty());
        assert!(err.starts_with("error: "), "{err}");
    }
    let (_, _, err) = run(&["ncat", "--input", data("not_globular.gset").to_str().unwrap()]);
    assert!(err.contains("`alpha`"), "{err}");
}

#[test]
fn files_written_elsewhere_load() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"n": 1, "cells": [["p", "q"], ["u", "v"]], "src": [{{"u": "p", "v": "q"}}], "tgt": [{{"u": "q", "v": "p"}}]}}"#).unwrap();
    let (code, out, _) = run(&["ncat", "--input", f.path().to_str().unwrap(), "--bound", "2", "--compare-oracle"]);
    assert_eq!(code, 0, "{out}");
    // p, q; paths of length at most 2 in a 2-cycle: u, v, uv, vu, plus ε(p), ε(q)
    assert_eq!(out, "dim 0: 2\ndim 1: 6\nORACLE MATCH\n");
}
