use std::process::{Command, Output};

use serde_json::{json, Value};

fn qal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qal"))
        .args(args)
        .env_remove("QAL_DEFAULT_QMODE")
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn unknown_suite_exits_2() {
    assert_eq!(qal(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(qal(&["skew", "--lambda", "1,x"]).status.code(), Some(2));
    assert_eq!(qal(&["verify", "--suite", "rmatrix", "--qmode", "rational:1"]).status.code(), Some(2));
    assert_eq!(qal(&["verify", "--suite", "rmatrix", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(qal(&["skew", "--lambda", "2,1,0", "--mu", "1", "--m", "2"]).status.code(), Some(2));
    assert_eq!(qal(&["sylvester", "--lambda", "1,0", "--m", "3"]).status.code(), Some(2));
    assert_eq!(qal(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn skew_empty_mu_drinfeld() {
    let o = qal(&["skew", "--lambda", "1,0", "--mu", "--m", "0", "--emit", "drinfeld"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["P"], json!(["1 - u"]));
}

#[test]
fn skew_dim_and_irreducibility() {
    let o = qal(&["skew", "--lambda", "3,2,0", "--mu", "1", "--emit", "dim,hw,irred", "--qmode", "rational:5/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["dim"], json!(4));
    assert_eq!(v["nu_exponents"], json!([[3, 1], [2, 0]]));
    assert_eq!(v["irreducibility"]["strongly_connected"], json!(true));
}

#[test]
fn env_default_qmode() {
    let o = Command::new(env!("CARGO_BIN_EXE_qal"))
        .args(["skew", "--lambda", "2,1,0", "--mu", "", "--emit", "drinfeld"])
        .env("QAL_DEFAULT_QMODE", "symbolic")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["P"], json!(["1 - (1*q^2)*u", "1 - u"]));
}

#[test]
fn verify_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = qal(&["verify", "--suite", "olshanski", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["schema"], json!(1));
    assert_eq!(v["config"]["seed"], json!(7));
}

#[test]
fn verify_all_passes() {
    let o = qal(&["verify", "--suite", "all", "--qmode", "rational:5/2", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["summary"]["fail"], json!(0));
    let suites: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["rmatrix", "relations", "minors", "sylvester", "complementary", "skew", "olshanski"]);
}

#[test]
fn rep_with_relations() {
    let o = qal(&["rep", "--lambda", "2,1,0", "--check-relations"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["dim"], json!(8));
    assert!(v["generators"]["t_21"].is_array());
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == json!("pass")));
}

#[test]
fn sylvester_and_complementary() {
    for args in [
        &["sylvester", "--lambda", "2,1,0", "--m", "1"][..],
        &["sylvester", "--lambda", "2,1,0", "--m", "2", "--dual"][..],
        &["complementary", "--lambda", "2,1,0", "--p", "1,3", "--q", "2,3", "--trials", "3"][..],
    ] {
        let o = qal(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v = stdout_json(&o);
        for c in v["checks"].as_array().unwrap() {
            assert_eq!(c["status"], json!("pass"));
            assert_eq!(c["witness"], Value::Null);
        }
    }
}

#[test]
fn olshanski_subcommand() {
    let o = qal(&["olshanski", "--lambda", "2,1,0", "--m", "1", "--checks", "d,phi,lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["summary"]["fail"], json!(0));
    assert_eq!(qal(&["olshanski", "--lambda", "2,1,0", "--checks", "nope"]).status.code(), Some(2));
}

#[test]
fn golden_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert_eq!(qal(&["golden", "--out", out]).status.code(), Some(0));
    let path = dir.path().join("skew_3_2_0__1.json");
    let first = std::fs::read(&path).unwrap();
    assert_eq!(qal(&["golden", "--out", out]).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), first);
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["dim"], json!(4));
    assert_eq!(qal(&["golden"]).status.code(), Some(2));
}
