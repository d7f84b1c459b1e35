use std::process::{Command, Output};

use linprod::kernel::{parse_rational, Rational};
use serde_json::Value;

fn linprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linprod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn classify_example() {
    let o = linprod(&["classify", "--alpha", "-33/100", "--beta", "-87/100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("label: V′\\V"));

    let o = linprod(&["classify", "--alpha", "-33/100", "--beta", "-87/100", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "classify");
    assert_eq!(v["payload"]["label"], "V′\\V");
    assert_eq!(v["params"]["alpha"], "-33/100");
    assert_eq!(v["payload"]["b"], "27/50");
}

#[test]
fn linearize_example() {
    let o = linprod(&["linearize", "--family", "gencheb", "--alpha", "1", "--beta", "0", "--m", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("k=1: 1/4"));
    assert!(text.contains("k=3: 3/4"));
    assert!(!text.contains("k=2:"), "structural zero printed in text mode");
}

#[test]
fn scan_example() {
    let o = linprod(&["scan", "--check", "nonneg", "--alpha", "-1/2", "--beta", "0", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("verdict: violation"));
    assert!(text.contains("witness: (1, 1, 1) = -4/7"));
}

fn json_values(args: &[&str]) -> Vec<(u32, Rational)> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = linprod(&full);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    v["payload"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["k"].as_u64().unwrap() as u32, parse_rational(c["value"].as_str().unwrap()).unwrap()))
        .collect()
}

fn csv_values(args: &[&str]) -> Vec<(u32, Rational)> {
    let mut full = args.to_vec();
    full.extend(["--format", "csv"]);
    let o = linprod(&full);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,k,value_num,value_den,approx"));
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            assert_eq!(f.len(), 6);
            let v = parse_rational(&format!("{}/{}", f[3], f[4])).unwrap();
            (f[2].parse().unwrap(), v)
        })
        .collect()
}

#[test]
fn json_and_csv_agree() {
    let cases: [&[&str]; 5] = [
        &["linearize", "--family", "jacobi", "--alpha", "1", "--beta", "0", "--m", "3", "--n", "5"],
        &["linearize", "--family", "gencheb", "--alpha", "-33/100", "--beta", "-87/100", "--m", "4", "--n", "4"],
        &["linearize", "--family", "jacobi-plus", "--alpha", "-1/2", "--beta", "0", "--m", "2", "--n", "3"],
        &["linearize", "--family", "jacobi", "--alpha", "1/2", "--beta", "1/4", "--m", "2", "--n", "4", "--method", "rahman"],
        &["linearize", "--family", "jacobi", "--alpha", "2", "--beta", "2", "--m", "3", "--n", "3", "--method", "dougall"],
    ];
    for args in cases {
        let j = json_values(args);
        assert!(!j.is_empty());
        assert_eq!(j, csv_values(args), "{args:?}");
    }
}

#[test]
fn methods_agree_on_one_product() {
    let base = ["linearize", "--family", "jacobi", "--alpha", "1/2", "--beta", "1/4", "--m", "3", "--n", "4"];
    let reference = json_values(&base);
    for method in ["brute", "rahman"] {
        let mut args = base.to_vec();
        args.extend(["--method", method]);
        assert_eq!(json_values(&args), reference, "{method}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["classify", "--alpha", "0.5", "--beta", "0"],
        vec!["classify", "--alpha", "1/0", "--beta", "0"],
        vec!["classify", "--alpha", "-1", "--beta", "0"],
        vec!["classify", "--alpha", "0", "--beta", "0", "--bogus"],
        vec!["linearize", "--family", "gencheb", "--alpha", "0", "--beta", "0", "--m", "1", "--n", "1", "--method", "rahman"],
        vec!["linearize", "--family", "jacobi", "--alpha", "1", "--beta", "0", "--m", "1", "--n", "1", "--method", "dougall"],
        vec!["linearize", "--family", "jacobi", "--alpha", "-1/2", "--beta", "0", "--m", "1", "--n", "1", "--method", "rahman"],
        vec!["scan", "--check", "odd", "--alpha", "0", "--beta", "0", "--max-degree", "3", "--format", "csv"],
        vec!["verify", "--property", "iota-zeros", "--alpha", "1", "--beta", "1"],
    ] {
        let o = linprod(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn compare_is_clean() {
    let o = linprod(&["compare", "--alpha", "1/2", "--beta", "1/2", "--max-degree", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "agree");
    assert_eq!(v["payload"]["summary"]["mismatches"], 0);
    let methods = v["payload"]["rows"][1]["methods"].as_array().unwrap();
    assert_eq!(methods.len(), 4, "gasper, brute, rahman and dougall all apply at alpha = beta = 1/2");
}

#[test]
fn verify_properties() {
    let q = ["--alpha", "-33/100", "--beta", "-87/100"];
    for prop in ["pq-inequality", "phi-alternation", "nec-identities", "recursion-consistency"] {
        let mut args = vec!["verify", "--property", prop];
        args.extend(q);
        args.extend(["--m", "3", "--s", "1", "--max-degree", "4"]);
        let o = linprod(&args);
        assert_eq!(o.status.code(), Some(0), "{prop}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("pass"));
    }
    let o = linprod(&["verify", "--property", "iota-zeros", "--alpha", "-81/200", "--beta", "-181/200", "--m", "2", "--s", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(": 2"));
}

#[test]
fn witness_command() {
    let o = linprod(&["witness", "--alpha", "-1/2", "--beta", "0", "--max-degree", "7", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = &v["payload"]["witness"];
    assert_eq!(w["k"], 2);
    assert_eq!(w["m"], w["n"]);
    assert!(parse_rational(w["value"].as_str().unwrap()).unwrap() < Rational::from_integer(0.into()));

    let o = linprod(&["witness", "--alpha", "0", "--beta", "0", "--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "none found");
}
