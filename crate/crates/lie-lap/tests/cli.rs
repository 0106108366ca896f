use std::process::{Command, Output};

use serde_json::Value;

fn lie_lap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-lap")).args(args).env_remove("LIE_LAP_THREADS").output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn exit_codes() {
    assert_eq!(code(&lie_lap(&["spectrum", "--group", "su2", "--tensor", "identity", "--max-eig", "10"])), 0);
    assert_eq!(code(&lie_lap(&["spectrum", "--group", "nope", "--tensor", "identity", "--max-eig", "10"])), 2);
    assert_eq!(code(&lie_lap(&["spectrum", "--group", "su2", "--tensor", "identity"])), 2);
    assert_eq!(code(&lie_lap(&["spectrum", "--group", "su2", "--tensor", "[[1,0],[0,1]]", "--max-eig", "3"])), 2);
    assert_eq!(code(&lie_lap(&["frobnicate"])), 2);
    let indefinite = "[[1,0,0],[0,-1,0],[0,0,1]]";
    assert_eq!(code(&lie_lap(&["spectrum", "--group", "su2", "--tensor", indefinite, "--max-eig", "3"])), 3);
    assert_eq!(code(&lie_lap(&["certify", "--group", "su2", "--tensor", indefinite, "--level", "2"])), 3);
    // The round metric has repeated eigenvalues, so certification fails.
    let o = lie_lap(&["certify", "--group", "su2", "--tensor", "identity", "--level", "2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["verdict"], Value::Bool(false));
}

#[test]
fn spectrum_of_the_round_sphere() {
    let o = lie_lap(&["spectrum", "--group", "su2", "--tensor", "identity", "--max-eig", "35"]);
    let v = json(&o);
    let entries = v["entries"].as_array().unwrap();
    let got: Vec<(String, u64, bool)> = entries
        .iter()
        .map(|e| (e["exact_value"].as_str().unwrap().to_string(), e["real_multiplicity"].as_u64().unwrap(), e["irreducible"].as_bool().unwrap()))
        .collect();
    let want: Vec<(String, u64, bool)> =
        (0..=5u64).map(|m| ((m * (m + 2)).to_string(), (m + 1) * (m + 1), m <= 1)).collect();
    assert_eq!(got, want);
}

#[test]
fn gram_and_tensor_inputs_agree() {
    let a = lie_lap(&["spectrum", "--group", "t2", "--gram", "[[2,0],[0,\"5/7\"]]", "--max-eig", "9"]);
    let b = lie_lap(&["spectrum", "--group", "t2", "--tensor", "[[\"1/2\",0],[0,\"7/5\"]]", "--max-eig", "9"]);
    assert_eq!(code(&a), 0);
    assert_eq!(json(&a)["entries"], json(&b)["entries"]);
}

#[test]
fn csv_and_pretty_formats() {
    let o = lie_lap(&["spectrum", "--group", "su2", "--tensor", "identity", "--max-eig", "8", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.records().count(), 3);
    let o = lie_lap(&["spectrum", "--group", "su2", "--tensor", "identity", "--max-eig", "8", "--format", "pretty"]);
    assert_eq!(code(&o), 0);
    assert!(!o.stdout.is_empty());
}

#[test]
fn witness_round_trips_through_certify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let path = path.to_str().unwrap();
    let o = lie_lap(&["witness", "--group", "so3", "--level", "4", "--seed", "3", "--output", path]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = lie_lap(&["certify", "--group", "so3", "--tensor", path, "--level", "4"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["verdict"], Value::Bool(true));
    assert!(v["certificates"].as_array().unwrap().iter().all(|c| c["value"].as_str() != Some("0")));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["witness", "--group", "su2xsu2", "--level", "2", "--seed", "9"];
    let one = lie_lap(&[&args[..], &["--threads", "1"]].concat());
    let four = lie_lap(&[&args[..], &["--threads", "4"]].concat());
    let env = Command::new(env!("CARGO_BIN_EXE_lie-lap")).args(args).env("LIE_LAP_THREADS", "2").output().unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, env.stdout);
    let s = ["spectrum", "--group", "su2xt1", "--tensor", "identity", "--max-eig", "20"];
    assert_eq!(lie_lap(&s).stdout, lie_lap(&s).stdout);
}

#[test]
fn config_file_supplies_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"command": "spectrum", "group": "su2", "tensor": "identity", "max-eig": 8}"#).unwrap();
    let o = lie_lap(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["entries"].as_array().unwrap().len(), 3);
    // Flags override the file.
    let o = lie_lap(&["--config", cfg.to_str().unwrap(), "spectrum", "--max-eig", "15"]);
    assert_eq!(json(&o)["entries"].as_array().unwrap().len(), 4);
    std::fs::write(&cfg, r#"{"command": "spectrum", "bogus": 1}"#).unwrap();
    assert_eq!(code(&lie_lap(&["--config", cfg.to_str().unwrap()])), 2);
}

#[test]
fn verify_paper_checks_pass() {
    let o = lie_lap(&["verify-paper", "--check", "all", "--max-m", "6"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    assert_eq!(json(&o)["passed"], Value::Bool(true));
}
