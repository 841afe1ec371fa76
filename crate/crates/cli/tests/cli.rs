use std::process::{Command, Output};

fn abzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abzeta")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(abzeta(&["alpha", "--bogus"]).status.code(), Some(2));
    assert_eq!(abzeta(&["alpha", "--k", "3"]).status.code(), Some(2));
    assert_eq!(abzeta(&["alpha", "--r", "2", "--limit", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn closed_form_above_bound_names_the_bound() {
    let out = abzeta(&["closed-form", "--r", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains('6'), "{err}");
}

#[test]
fn alpha_values() {
    let out = abzeta(&["alpha", "--r", "2", "--k", "4"]);
    assert!(out.status.success());
    let table = stdout(&abzeta(&["alpha-table", "--limit", "--kmax", "5"]));
    assert_eq!(table, "0,1\n1,2\n2,6\n3,13\n4,30\n5,58\n");
    assert_eq!(stdout(&abzeta(&["alpha", "--limit", "--k", "4"])).trim(), "30");
}

#[test]
fn json_shape() {
    let out = abzeta(&["--format", "json", "coeff", "--series", "z", "--r", "2", "--n", "8"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["command"], "coeff");
    let cells = v["rows"][0].as_array().unwrap();
    assert!(cells.iter().all(|c| c.is_string()), "integers are strings: {v}");

    let out = abzeta(&["--format", "json", "constant", "--series", "z", "--r", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = &v["rows"][0][0];
    assert!((c["value"].as_f64().unwrap() - 3.702716472475540).abs() < 1e-12, "{v}");
    assert!(c["err"].as_f64().unwrap() < 1e-12);
}

#[test]
fn output_is_deterministic() {
    let args = ["beta-table", "--rmax", "6", "--mmax", "10"];
    assert_eq!(abzeta(&args).stdout, abzeta(&args).stdout);
    let args = ["--format", "json", "group", "--lambda", "2,2,4", "--p", "3", "--kind", "direct", "--list"];
    assert_eq!(abzeta(&args).stdout, abzeta(&args).stdout);
}

#[test]
fn group_subgroup_classes() {
    let out = abzeta(&["group", "--lambda", "2,2,4", "--p", "2", "--kind", "classes"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim().ends_with("22"), "{}", stdout(&out));
}

#[test]
fn verify_funceq_and_selftest_pass() {
    for r in ["0", "3", "5"] {
        assert_eq!(abzeta(&["verify-funceq", "--r", r]).status.code(), Some(0), "r = {r}");
    }
    let out = abzeta(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn summatory_of_rank_one() {
    assert_eq!(stdout(&abzeta(&["sum", "--series", "z", "--r", "1", "--x", "10"])).trim(), "10,27");
}
