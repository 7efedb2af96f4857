use std::process::{Command, Output};

fn dyckm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn enumerate_lists_paths() {
    let o = dyckm(&["enumerate", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        r#"[{"m":2,"levels":[0,4]},{"m":2,"levels":[1,3]},{"m":2,"levels":[2,2]}]"#
    );
}

#[test]
fn product_single_index() {
    let o = dyckm(&[
        "product", "--i", "0",
        "--lhs", r#"{"m":2,"levels":[1,3]}"#,
        "--rhs", r#"{"m":2,"levels":[0,2,4,2]}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn product_all_is_sum_of_indices() {
    let lhs = r#"{"m":1,"levels":[1]}"#;
    let o = dyckm(&["product", "--i", "all", "--lhs", lhs, "--rhs", lhs]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn coproduct_of_generator() {
    let o = dyckm(&["coproduct", "--path", r#"{"m":2,"levels":[2]}"#]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn hasse_dot() {
    let o = dyckm(&["hasse", "--m", "1", "--n", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("digraph"));
    assert_eq!(s.matches("->").count(), 5);
}

#[test]
fn basis_counts() {
    let o = dyckm(&["basis", "--m", "2", "--n", "3", "--k", "2", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "12");
}

#[test]
fn series_check() {
    let o = dyckm(&["series", "--m", "2", "--degree", "4", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[1,1,3,12,55]");
}

#[test]
fn verify_passes() {
    let o = dyckm(&["verify", "--suite", "interval", "--m", "1", "--max-size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ok"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["enumerate", "--m", "2", "--n", "7"],
        vec!["enumerate", "--m", "0", "--n", "2"],
        vec!["product", "--i", "x", "--lhs", r#"{"m":1,"levels":[1]}"#, "--rhs", r#"{"m":1,"levels":[1]}"#],
        vec!["coproduct", "--path", r#"{"m":2,"levels":[3]}"#],
        vec!["verify", "--suite", "nope", "--m", "1", "--max-size", "2"],
        vec!["frobnicate"],
    ] {
        let o = dyckm(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unsafe_lifts_guard() {
    let o = dyckm(&["--unsafe", "basis", "--m", "3", "--n", "5", "--k", "3", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
}
