use std::process::{Command, Output};

use serde_json::Value;

fn qpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpa")).args(args).env_remove("QPA_BOUND").output().expect("qpa runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn toda_suite_on_zsigma_passes() {
    let o = qpa(&["check", "--instance", "builtin:zsigma", "--laws", "T*", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = lines(&o);
    let ids: Vec<&str> = rows.iter().filter_map(|r| r["law_id"].as_str()).collect();
    for id in ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T11", "T12"] {
        assert!(ids.contains(&id), "{id} missing from {ids:?}");
    }
    let last = rows.last().unwrap();
    assert_eq!(last["summary"]["status"], "pass");
    assert_eq!(last["summary"]["fail"], 0);
}

#[test]
fn negative_control_fails_with_witness() {
    let o = qpa(&["check", "--instance", "builtin:lambda-z-einfty-negative", "--laws", "O6", "--bound", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let rows = lines(&o);
    assert_eq!(rows[0]["law_id"], "O6");
    assert_eq!(rows[0]["status"], "fail");
    assert_eq!(rows[0]["witness"]["inputs"], serde_json::json!(["x", "x", "x"]));
    assert_eq!(rows[1]["summary"]["fail"], 1);
}

#[test]
fn load_errors_exit_two() {
    assert_eq!(qpa(&["check", "--instance", "missing.json"]).status.code(), Some(2));
    assert_eq!(qpa(&["check", "--instance", "builtin:nope"]).status.code(), Some(2));
    assert_eq!(qpa(&["check", "--instance", "builtin:zsigma", "--laws", "[bad"]).status.code(), Some(2));
    assert_eq!(qpa(&["check", "--instance", "builtin:zsigma", "--laws", "NOPE"]).status.code(), Some(2));
    assert_eq!(qpa(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bound_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qpa"))
        .args(["check", "--instance", "builtin:zsigma", "--laws", "A1"])
        .env("QPA_BOUND", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let count = |bound: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_qpa"))
            .args(["check", "--instance", "builtin:zsigma", "--laws", "A1"])
            .env("QPA_BOUND", bound)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        lines(&o)[0]["tuples_checked"].as_u64().unwrap()
    };
    assert!(count("2") < count("3"));
    let flag = qpa(&["check", "--instance", "builtin:zsigma", "--laws", "A1", "--bound", "2"]);
    assert_eq!(lines(&flag)[0]["tuples_checked"].as_u64().unwrap(), count("2"));
}

#[test]
fn bracket_of_x_x_x() {
    let o = qpa(&["bracket", "builtin:lambda-z", "x", "x", "x"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["representative"], "q");
    assert_eq!(v["indeterminacy"], serde_json::json!([]));
    assert_eq!(v["coset"], serde_json::json!(["q"]));
}

#[test]
fn bracket_with_zero_middle_contains_zero() {
    let o = qpa(&["bracket", "builtin:zsigma", "1", "0", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["coset"].as_array().unwrap().contains(&Value::from("0")));
}

#[test]
fn undefined_bracket_names_the_product() {
    let o = qpa(&["bracket", "builtin:lambda-z", "x", "1", "x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x·1 ≠ 0"));
}

#[test]
fn sq1_of_two_under_both_lifts() {
    for (lift, args) in [("tauhat", vec!["sq1", "builtin:zsigma", "2"]), ("omega", vec!["sq1", "builtin:zsigma", "2", "--lift", "omega"])] {
        let o = qpa(&args);
        assert_eq!(o.status.code(), Some(0));
        let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        assert_eq!(v["lift"], lift);
        assert_eq!(v["coords"], serde_json::json!([1]));
        assert_eq!(v["value"], "eta");
    }
    let o = qpa(&["sq1", "builtin:zsigma", "1"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["coords"], serde_json::json!([0]));
    assert_eq!(qpa(&["sq1", "builtin:lambda-z", "x"]).status.code(), Some(2));
    assert_eq!(qpa(&["sq1", "builtin:zsigma", "2", "--lift", "nope"]).status.code(), Some(2));
}

#[test]
fn odd_classes_have_no_square() {
    assert_eq!(qpa(&["sq1", "builtin:lambda-z3-einfty", "x"]).status.code(), Some(1));
}

#[test]
fn track_subcommands() {
    let o = qpa(&["track", "verify", "--nmax", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = qpa(&["track", "mul", "4", "t1 t3", "t1 t3"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["word"], "w");
    let o = qpa(&["track", "table", "3"]);
    assert_eq!(stdout(&o).lines().count(), 12);
    assert_eq!(qpa(&["track", "table", "9"]).status.code(), Some(2));
}

#[test]
fn check_output_is_deterministic() {
    let args = ["check", "--instance", "builtin:lambda-z3-einfty", "--bound", "2", "--budget", "500"];
    let a = qpa(&args);
    let b = qpa(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = qpa(&["--jobs", "1", "check", "--instance", "builtin:lambda-z3-einfty", "--bound", "2", "--budget", "500"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn emitted_instances_load_back() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["zsigma", "lambda-z3-einfty"] {
        let o = qpa(&["emit", name]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &o.stdout).unwrap();
        let p = path.to_str().unwrap();
        let again = qpa(&["check", "--instance", p, "--laws", "A*", "--bound", "2"]);
        assert_eq!(again.status.code(), Some(0), "{}", String::from_utf8_lossy(&again.stderr));
        let direct = qpa(&["check", "--instance", &format!("builtin:{name}"), "--laws", "A*", "--bound", "2"]);
        assert_eq!(again.stdout, direct.stdout);
    }
}

#[test]
fn instances_lists_builtins() {
    let o = qpa(&["instances"]);
    let rows = lines(&o);
    assert!(rows.iter().any(|r| r["name"] == "zsigma" && r["einfty"] == true));
    assert!(rows.iter().any(|r| r["name"] == "lambda-z" && r["einfty"] == false));
}

#[test]
fn human_format_prints_labels() {
    let o = qpa(&["--format", "human", "check", "--instance", "builtin:zsigma", "--laws", "T6", "--bound", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("(T6)"));
    assert!(s.contains("[vacuous]"));
}
