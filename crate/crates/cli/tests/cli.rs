use std::io::Write;
use std::process::{Command, Output, Stdio};

fn extremal(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_extremal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_then_invariants() {
    let c = extremal(&["construct", "--family", "gstar", "--n", "6", "--k", "3", "--l", "2"], None);
    assert!(c.status.success());
    let g6 = stdout(&c);
    let inv = extremal(&["invariants"], Some(&g6));
    assert!(inv.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&inv).trim()).unwrap();
    assert_eq!(v["chromatic"], 3);
    assert_eq!(v["connectivity"], 2);
    assert_eq!(v["n"], 6);
}

#[test]
fn count_reports_polynomial() {
    let out = extremal(&["count", "--poly"], Some("DLo\n"));
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["total"], "11");
    assert_eq!(v["coefficients"], serde_json::json!(["1", "5", "5"]));
    assert!(v["polynomial"].is_string());
}

#[test]
fn bounds_table() {
    let out = extremal(&["bounds", "--n", "10", "--k", "5", "--l", "3"], None);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text.lines().find(|l| l.contains("min_edges_small_l ")).unwrap();
    assert!(line.split_whitespace().any(|w| w == "19"), "{line}");
}

#[test]
fn bounds_json() {
    let out = extremal(&["bounds", "--n", "6", "--k", "3", "--l", "2", "--format", "json"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v[0]["bounds"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["name"] == "istar_total" && r["value"] == "18"));
}

#[test]
fn search_json() {
    let out = extremal(&["search", "--n", "5", "--k", "3", "--l", "2", "--objective", "total"], None);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["best_value"], "11");
    assert_eq!(v["verdict"], "MATCHES_PAPER");
}

#[test]
fn verify_passes() {
    let out = extremal(&["verify", "--theorem", "T3_i2", "--n", "5..7"], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn probe_counterexample_exits_three() {
    let out = extremal(&["probe", "--conjecture", "C2", "--n", "6", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let bad: Vec<_> = v.as_array().unwrap().iter().filter(|r| r["verdict"] == "COUNTEREXAMPLE").collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0]["witness"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    let bad_params = extremal(&["construct", "--family", "gstar", "--n", "3", "--k", "5", "--l", "2"], None);
    assert_eq!(bad_params.status.code(), Some(2));
    assert!(!bad_params.stderr.is_empty());
    assert_eq!(extremal(&["construct", "--bogus"], None).status.code(), Some(2));
    let capped = extremal(&["search", "--n", "12", "--k", "3", "--l", "2", "--objective", "total"], None);
    assert_eq!(capped.status.code(), Some(2));
    assert_eq!(extremal(&["invariants"], Some("not graph6 \u{1}\n")).status.code(), Some(2));
}
