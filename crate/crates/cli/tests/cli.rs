use std::process::{Command, Output};

fn dasasm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dasasm")).args(args).env_remove("DASASM_MAX_N").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_two_as_csv() {
    let o = dasasm(&["count", "--class", "dasasm", "--split-center", "--n", "0..7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines[0], "n,order,total,plus,minus,formula_total,formula_plus,formula_minus,agree");
    assert_eq!(lines[1], "0,1,1,1,0,1,1,0,true");
    assert_eq!(lines[8], "7,15,115640460,61674912,53965548,115640460,61674912,53965548,true");
}

#[test]
fn counts_alias_with_n_max() {
    let a = dasasm(&["counts", "--class", "dasasm", "--split-center", "--n-max", "4", "--format", "csv"]);
    let b = dasasm(&["count", "--class", "dasasm", "--split-center", "--n", "0..4", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(dasasm(&["count", "--n", "1", "--n-max", "3"]).status.code(), Some(2));
}

#[test]
fn asm_counts() {
    let o = dasasm(&["count", "--class", "asm", "--n", "1..5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let counts: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 2, 7, 42, 429]);
}

#[test]
fn single_order() {
    let o = dasasm(&["count", "--class", "dasasm", "--n", "0", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("0,1,1,1,true"));
}

#[test]
fn bound_exceeded_exits_two() {
    let o = dasasm(&["count", "--n", "0..40"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the bound"));
    let o = Command::new(env!("CARGO_BIN_EXE_dasasm"))
        .args(["count", "--n", "3"])
        .env("DASASM_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(dasasm(&["count", "--class", "nonsense"]).status.code(), Some(2));
    assert_eq!(dasasm(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(dasasm(&["eval", "z", "--n", "1", "--u", "1", "--q", "zeta", "x", "1"]).status.code(), Some(2));
}

#[test]
fn eval_examples() {
    let o = dasasm(&["eval", "z", "--n", "5", "--u", "1", "--q", "zeta", "12", "1"]);
    assert_eq!(stdout(&o).trim(), "42471");
    let a = dasasm(&["eval", "rhs-full", "--n", "2", "--u", "2,3,5", "--q", "7/3"]);
    let b = dasasm(&["eval", "z", "--n", "2", "--u", "2,3,5", "--q", "7/3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let c = dasasm(&["eval", "schur-rhs", "--n", "2", "--u", "2,3,5"]);
    let d = dasasm(&["eval", "z", "--n", "2", "--u", "2,3,5"]);
    assert_eq!(stdout(&c), stdout(&d));
    assert_eq!(stdout(&dasasm(&["eval", "rhs-u1", "--n", "2", "--u", "1"])).trim(), "15");
}

#[test]
fn q_stops_at_the_next_flag() {
    let o = dasasm(&["eval", "z", "--n", "1", "--u", "2", "--q", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q"], "3");
    let a = dasasm(&["eval", "z", "--n", "1", "--u", "2", "--q=-3/2"]);
    let b = dasasm(&["eval", "z", "--n", "1", "--u", "2", "--q", "zeta", "12", "-1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
}

#[test]
fn symbolic_order_one() {
    let o = dasasm(&["eval", "z", "--n", "1", "--symbolic", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cleared"], true);
    assert_eq!(v["variables"], serde_json::json!(["q", "u1", "u2"]));
    assert!(v["value"].as_str().unwrap().contains("q^6"));
}

#[test]
fn singular_eval_names_factor() {
    let o = dasasm(&["eval", "rhs-full", "--n", "2", "--u", "2,2,5", "--q", "7/3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sigma(u1/u2)"));
}

#[test]
fn verify_is_reproducible() {
    let args =
        ["verify", "--suite", "theorem-full", "--n", "1..2", "--trials", "3", "--seed", "17", "--format", "json"];
    let a = dasasm(&args);
    let b = dasasm(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["summary"]["pass"], 7);
}

#[test]
fn verify_suites_pass() {
    for suite in ["relations", "ipi4", "htsasm-ratio", "okada"] {
        let o = dasasm(&["verify", "--suite", suite, "--trials", "3"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn htsasm_ratios() {
    let o = dasasm(&["count", "--class", "htsasm", "--split-center", "--n", "3..7", "--format", "csv"]);
    let ratios: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(3).unwrap().to_string()).collect();
    assert_eq!(ratios, ["1/2", "2/3", "3/4"]);
}

#[test]
fn conjecture_never_fails_the_run() {
    let o = dasasm(&["verify", "--suite", "q3-conjecture", "--n", "1..2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["conjecture_confirmed"], 6);
}
