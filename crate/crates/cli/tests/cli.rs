use assert_cmd::Command;
use predicates::prelude::*;

fn cmd() -> Command {
    Command::cargo_bin("theta-pos").unwrap()
}

const TP2: &str = r#"{"rows":2,"cols":2,"entries":[["1","1"],["1","2"]]}"#;
const ID2: &str = r#"{"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]}"#;

#[test]
fn check_tp_verdicts() {
    cmd()
        .args(["check-tp", "--matrix", TP2])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"verdict\": true"));
    cmd().args(["check-tp", "--matrix", ID2]).assert().code(1);
}

#[test]
fn malformed_json_exits_2() {
    cmd()
        .args(["check-tp", "--matrix", "{not json"])
        .assert()
        .code(2)
        .stdout(predicate::str::contains("error"));
    // shape mismatch names the field
    cmd()
        .args([
            "check-tp",
            "--matrix",
            r#"{"rows":2,"cols":2,"entries":[["1","1"]]}"#,
        ])
        .assert()
        .code(2)
        .stdout(predicate::str::contains("entries"));
}

#[test]
fn factor_reports_ldu() {
    let g = r#"{"rows":2,"cols":2,"entries":[["2","1"],["1","2"]]}"#;
    cmd()
        .args(["factor", "--matrix", g])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"lower\""))
        .stdout(predicate::str::contains("\"3/2\""));
    // vanishing leading minor is a fail verdict, not an input error
    let swap = r#"{"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]}"#;
    cmd().args(["factor", "--matrix", swap]).assert().code(1);
}

#[test]
fn transition_matches_sl3_map() {
    cmd()
        .args(["transition", "--n", "3", "--from", "121", "--to", "212", "--values", "1,1,1"])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"1/2\""))
        .stdout(predicate::str::contains("\"2\""));
}

#[test]
fn param_evaluates_word() {
    cmd()
        .args([
            "param",
            "--n",
            "2",
            "--params",
            r#"{"word":[1],"values":["3/2"]}"#,
        ])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"3/2\""));
}

#[test]
fn so3q_braid_frozen_example() {
    cmd()
        .args([
            "so3q", "braid", "--q", "4", "--x1", "1", "--v1", "1,0,1", "--x2", "1", "--v2",
            "1,0,1",
        ])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"9/5\""))
        .stdout(predicate::str::contains("\"1/5\""))
        .stdout(predicate::str::contains("\"5/3\""));
}

#[test]
fn so3q_invert_identity_is_negative() {
    let id7 = {
        let rows: Vec<String> = (0..7)
            .map(|i| {
                let row: Vec<String> =
                    (0..7).map(|j| format!("\"{}\"", i32::from(i == j))).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        format!(r#"{{"rows":7,"cols":7,"entries":[{}]}}"#, rows.join(","))
    };
    cmd()
        .args(["so3q", "invert", "--q", "4", "--word", "1212", "--matrix", &id7])
        .assert()
        .code(1)
        .stdout(predicate::str::contains("not in the positive semigroup"));
}

#[test]
fn maslov_and_lag_triple() {
    // L_E, graph of identity, L_F for n = 1
    let le = r#"{"rows":2,"cols":1,"entries":[["1"],["0"]]}"#;
    let gr = r#"{"rows":2,"cols":1,"entries":[["1"],["1"]]}"#;
    let lf = r#"{"rows":2,"cols":1,"entries":[["0"],["1"]]}"#;
    cmd()
        .args(["maslov", "--n", "1", "--l1", le, "--l2", gr, "--l3", lf])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"index\": 1"));
    cmd()
        .args(["lag-triple", "--n", "1", "--l1", le, "--l2", gr, "--l3", lf])
        .assert()
        .code(0);
    // negative graph: not positive
    let bad = r#"{"rows":2,"cols":1,"entries":[["1"],["-1"]]}"#;
    cmd()
        .args(["lag-triple", "--n", "1", "--l1", le, "--l2", bad, "--l3", lf])
        .assert()
        .code(1);
}

#[test]
fn triple_sl_convention_tracks_sign() {
    let e = r#"{"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]}"#;
    let f = r#"{"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]}"#;
    let pos = r#"{"rows":2,"cols":2,"entries":[["1","1"],["1","0"]]}"#;
    let neg = r#"{"rows":2,"cols":2,"entries":[["-1","1"],["1","0"]]}"#;
    cmd()
        .args(["triple", "--f1", e, "--t", pos, "--f3", f, "--sl"])
        .assert()
        .code(0);
    cmd()
        .args(["triple", "--f1", e, "--t", neg, "--f3", f, "--sl"])
        .assert()
        .code(1);
    // GL convention accepts any distinct line triple in the plane
    cmd().args(["triple", "--f1", e, "--t", neg, "--f3", f]).assert().code(0);
}

#[test]
fn sample_is_deterministic_per_seed() {
    let a = cmd()
        .args(["sample", "--kind", "tp", "--size", "3", "--count", "2", "--seed", "11"])
        .output()
        .unwrap();
    let b = cmd()
        .args(["sample", "--kind", "tp", "--size", "3", "--count", "2", "--seed", "11"])
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let c = cmd()
        .args(["sample", "--kind", "tp", "--size", "3", "--count", "2", "--seed", "12"])
        .output()
        .unwrap();
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn seed_env_fallback() {
    let a = cmd()
        .env("THETA_POS_SEED", "99")
        .args(["sample", "--kind", "unipotent", "--size", "3", "--count", "1"])
        .output()
        .unwrap();
    let b = cmd()
        .args(["sample", "--kind", "unipotent", "--size", "3", "--count", "1", "--seed", "99"])
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selftest_passes() {
    cmd()
        .args(["selftest", "--seed", "7"])
        .assert()
        .code(0)
        .stdout(predicate::str::contains("\"passed\""))
        .stdout(predicate::str::contains("\"verdict\": true"));
}
