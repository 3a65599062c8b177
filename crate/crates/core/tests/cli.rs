use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove-ideals")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn info_a2() {
    let o = run(&["info", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("coxeter number 3"), "{s}");
    assert!(s.contains("highest root (1,1)"), "{s}");
}

#[test]
fn type_flag_and_positional_agree() {
    assert_eq!(stdout(&run(&["info", "B3"])), stdout(&run(&["info", "--type", "B3"])));
}

#[test]
fn bad_type_is_usage_error() {
    let o = run(&["info", "Z9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Z9"));
}

#[test]
fn non_ideal_mask_is_usage_error() {
    assert_eq!(run(&["alcove", "A2", "--ideal", "1"]).status.code(), Some(2));
}

#[test]
fn ideals_listing() {
    let o = run(&["ideals", "A3", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    // header plus one row per ideal
    assert_eq!(stdout(&o).lines().count(), 15);
    let o = run(&["ideals", "B2", "--strict", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ideals"].as_array().map(|a| a.len()), Some(3), "{v}");
}

#[test]
fn alcove_of_highest_root_ideal() {
    let o = run(&["alcove", "A2", "--ideal", "4", "--which", "min", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["length"], 1);
    let o = run(&["alcove", "A2", "--ideal", "0", "--which", "max", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], serde_json::json!([0, 0, 0]));
    assert_eq!(run(&["alcove", "A2", "--ideal", "4", "--which", "max"]).status.code(), Some(0));
    // the full ideal contains simple roots, so it has no maximal alcove
    assert_eq!(run(&["alcove", "A2", "--ideal", "7", "--which", "max"]).status.code(), Some(2));
}

#[test]
fn count_matches_formula() {
    let o = run(&["count", "F4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    let got: Vec<i64> = rows.iter().map(|r| r["enumerated"].as_i64().unwrap()).collect();
    assert_eq!(got.iter().copied().collect::<std::collections::BTreeSet<_>>(), [66, 105].into());
}

#[test]
fn verify_passes_and_is_byte_stable() {
    let a = run(&["verify", "B2", "--theorem", "lengths", "--json", "--budget", "50"]);
    let b = run(&["verify", "B2", "--theorem", "lengths", "--json", "--budget", "50"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v.get("elapsed_ms").is_none());
    let t = run(&["verify", "B2", "--theorem", "lengths", "--json", "--budget", "50", "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&t.stdout).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn verify_over_cap_is_usage_error() {
    assert_eq!(run(&["verify", "E8", "--theorem", "keyaffine"]).status.code(), Some(2));
}

#[test]
fn classify_csv() {
    let o = run(&["classify", "B2", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let counts: Vec<&str> = s.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(counts, ["1", "2", "2", "1"]);
}

#[test]
fn dset_and_simplexmap() {
    let o = run(&["dset", "A2", "--t", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["points"].as_array().map(|a| a.len()), Some(5), "{v}");
    assert_eq!(run(&["simplexmap", "A2", "--t", "4"]).status.code(), Some(0));
    assert_eq!(run(&["dset", "A2", "--t", "3"]).status.code(), Some(2));
}
