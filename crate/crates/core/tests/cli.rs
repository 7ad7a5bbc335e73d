//! The `normality` binary: subcommands, JSON shapes and exit codes.

use std::fs;
use std::process::{Command, Output};

use monomial_normality::cli::CliError;
use monomial_normality::{Error, MembershipCertificate};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normality")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn closure_and_power_closure() {
    let v = json(&["closure", "--gens", "2,0;0,2"]);
    assert_eq!(v["closure"], "2,0;1,1;0,2");
    let v = json(&["power-closure", "--gens", "2,0;0,2", "--power", "2"]);
    assert_eq!(v["closure"], "4,0;3,1;2,2;1,3;0,4");
}

#[test]
fn normal_by_lambda_reports_witness() {
    let v = json(&["--json", "normal", "--lambda", "2,3,7"]);
    assert_eq!(v["normal"], false);
    assert_eq!(v["witness"]["p"], 2);
    assert_eq!(v["witness"]["alpha"], "1,2,6");
    let v = json(&["normal", "--lambda", "2,2,2", "--force-enumeration"]);
    assert_eq!(v["normal"], true);
    assert_eq!(v["method"], "bounded-decomposition");
}

#[test]
fn normal_by_generators() {
    let v = json(&["normal", "--gens", "2,0;1,1;0,2"]);
    assert_eq!(v["normal"], true);
    let v = json(&["normal", "--gens", "2,0;0,2"]);
    assert_eq!(v["normal"], false);
}

#[test]
fn monoid_and_rees() {
    assert_eq!(json(&["monoid", "almost-qn", "--lambda", "2,3,7"])["almost_quasinormal"], false);
    let v = json(&["monoid", "quasinormal", "--lambda", "2,3,7", "--bound", "85"]);
    assert_eq!(v["window"]["verdict"], "failure");
    assert_eq!(v["window"]["s"], 85);
    let v = json(&["rees", "r1", "--lambda", "2,3,5"]);
    assert_eq!(v["r1"], true);
    assert_eq!(v["witness"], "1,1,1,1");
    let v = json(&["rees", "primes", "--lambda", "2,3"]);
    assert!(v.get("P_3").is_some() && v.get("P_sigma").is_some());
}

#[test]
fn ilambda_gens_and_reduce() {
    let v = json(&["ilambda-gens", "--lambda", "2,3"]);
    assert_eq!(v["generators"], "2,0;1,2;0,3");
    let v = json(&["reduce", "--lambda", "2,3,7", "--index", "3"]);
    assert_eq!(v["lambda_prime"], serde_json::json!([2, 3, 13]));
    assert_eq!(v["relation"], "equivalent");
}

#[test]
fn certify_round_trips() {
    let v = json(&["certify", "--gens", "2,0;0,2", "--point", "1,1"]);
    let cert: MembershipCertificate = serde_json::from_value(v.clone()).unwrap();
    assert!(cert.is_inside());
    assert_eq!(serde_json::to_value(&cert).unwrap(), v);
    assert!(cert.verify(&"2,0;0,2".parse().unwrap()).unwrap());
}

#[test]
fn sweep_writes_identical_csv_for_any_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, workers) in [(&a, "1"), (&b, "3")] {
        let out = run(&["sweep", "--n", "3", "--max-lambda", "5", "--workers", workers, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("lambda,gcd,normal,witness,almost_qn,r1,qn_window,qn_bound,lambda_prime,relation\n"));
    assert_eq!(text.lines().count(), 1 + 35);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["closure", "--gens", "2,x"][..],
        &["normal", "--lambda", "0,3"],
        &["normal"],
        &["closure", "--gens", "1,0;1"],
        &["no-such-command"],
        &["reduce", "--lambda", "2,3", "--index", "3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn io_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    fs::write(&blocker, "x").unwrap();
    let target = blocker.join("out.csv");
    let out = run(&["sweep", "--n", "2", "--max-lambda", "3", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["--seed-fixtures", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn inconsistencies_map_to_exit_4() {
    let e = CliError::from(Error::Inconsistency("mismatch".into()));
    assert_eq!(e.exit_code(), 4);
    assert_eq!(CliError::from(Error::ZeroIdeal).exit_code(), 2);
}
