use std::process::{Command, Output};

fn qtrace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtrace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_n2_all_passes() {
    let o = qtrace(&["verify", "--n", "2", "--checks", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_n0_is_usage_error() {
    let o = qtrace(&["verify", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn unknown_check_is_usage_error() {
    assert_eq!(
        qtrace(&["verify", "--checks", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_commute_json() {
    let o = qtrace(&[
        "verify",
        "--n",
        "3",
        "--checks",
        "commute",
        "--max-power",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let commute = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"] == "commute")
        .count();
    assert_eq!(commute, 25);
    assert_eq!(v["n"], 3);
}

#[test]
fn expand_reorders() {
    let o = qtrace(&["expand", "x[2,2]*x[1,1]", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "(1)*x[1,1]*x[2,2] + (-1*q + 1*q^-1)*x[1,2]*x[2,1]"
    );
}

#[test]
fn expand_parse_error_exits_2() {
    let o = qtrace(&["expand", "x[3,1]", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sigma_and_minor() {
    let o = qtrace(&["sigma", "--n", "2", "--k", "2"]);
    assert_eq!(
        stdout(&o).trim(),
        "(1)*x[1,1]*x[2,2] + (-1*q)*x[1,2]*x[2,1]"
    );
    let o = qtrace(&["minor", "--n", "3", "--rows", "1,2", "--cols", "2,3"]);
    assert_eq!(
        stdout(&o).trim(),
        "(1)*x[1,2]*x[2,3] + (-1*q)*x[1,3]*x[2,2]"
    );
}

#[test]
fn trace_power_json() {
    let o = qtrace(&["trace-power", "--n", "2", "--k", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"], 3);
    assert_eq!(
        v["value"],
        "(1)*x[1,1]*x[1,1] + (1*q + 1*q^-1)*x[1,2]*x[2,1] + (1)*x[2,2]*x[2,2]"
    );
}

#[test]
fn newton_and_t_basis() {
    let o = qtrace(&["newton", "--n", "3", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    let o = qtrace(&["t-basis", "--n", "2", "--k", "3"]);
    assert_eq!(stdout(&o).trim(), "3/2*t[1]*t[2] + -1/2*t[1]^3");
}

#[test]
fn pbracket_generators() {
    let o = qtrace(&["pbracket", "y[1,1]", "y[1,2]", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "1*y[1,1]*y[1,2]");
    let o = qtrace(&["pbracket", "y[1,2]", "y[2,1]", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "0");
}
