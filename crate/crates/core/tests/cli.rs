use std::process::{Command, Output};

use lamplighter_rf::lamplighter::LampElement;
use lamplighter_rf::polyring::{format_poly, parse_ordinary_poly, PrimeModulus};
use serde_json::Value;

fn rfcli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rfcli"))
        .args(args)
        .env_remove("RF_PRIME")
        .env_remove("RF_FORMAT")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = rfcli(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn divisibility_example() {
    let v = json(&["--prime", "2", "divisibility", "(1+t,0)"]);
    assert_eq!(v["result"]["D"], 8);
    assert_eq!(v["result"]["g"], "1+t^2");
    assert_eq!(v["result"]["k"], 2);
}

#[test]
fn rf_table_first_row() {
    let out = rfcli(&["--prime", "2", "--format", "csv", "rf-table", "--radius", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(&rows[1][0], "1");
    assert_eq!(&rows[1][1], "2");
}

#[test]
fn lcm_deg_example() {
    let v = json(&["--prime", "2", "lcm-deg", "--d", "2"]);
    let row = &v["result"][1];
    assert_eq!(
        (row["d"].as_u64(), row["degree"].as_u64(), row["lower"].as_u64(), row["upper"].as_u64()),
        (Some(2), Some(6), Some(4), Some(16))
    );
}

#[test]
fn exit_codes() {
    assert_eq!(rfcli(&["--prime", "6", "order", "1+t"]).status.code(), Some(2));
    assert_eq!(rfcli(&["wordlen", "(1+t,"]).status.code(), Some(2));
    assert_eq!(rfcli(&["divisibility", "(0,0)"]).status.code(), Some(2));
    assert_eq!(rfcli(&["--cap-k", "3", "conjecture", "--k-max", "4"]).status.code(), Some(3));
    assert_eq!(rfcli(&["--cap-order", "7", "divisibility", "(1+t,0)"]).status.code(), Some(3));
    assert_eq!(rfcli(&["nope"]).status.code(), Some(2));
}

#[test]
fn parse_errors_report_position() {
    let out = rfcli(&["factor", "1+t^x"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte"));
}

#[test]
fn env_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_rfcli"))
        .args(["--format", "json", "order", "1+t"])
        .env("RF_PRIME", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["prime"], 3);
    assert_eq!(v["result"]["order"], 2);
}

#[test]
fn writes_out_file() {
    let path = std::env::temp_dir().join(format!("rfcli-out-{}.csv", std::process::id()));
    let out = rfcli(&["--format", "csv", "--out", path.to_str().unwrap(), "factor", "t^2+1"]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("poly,factored,degree,irreducible\n1+t^2,(1+t)^2,2,false\n"));
    assert!(!rfcli(&["--out", "/nonexistent-dir/x.csv", "factor", "t"]).status.success());
}

#[test]
fn printed_polynomials_reparse() {
    let p = PrimeModulus::new(3).unwrap();
    let v = json(&["--prime", "3", "divisibility", "(2t^-2+t,3)"]);
    let element = v["result"]["element"].as_str().unwrap();
    assert_eq!(LampElement::parse(element, p).unwrap().to_string(), element);
    let g = v["result"]["g"].as_str().unwrap();
    assert_eq!(format_poly(&parse_ordinary_poly(g, p).unwrap()), g);
    let f = json(&["--prime", "3", "factor", "t^4+2"]);
    for item in f["result"]["factors"].as_array().unwrap() {
        let s = item["factor"].as_str().unwrap();
        assert!(parse_ordinary_poly(s, p).is_ok());
    }
}
