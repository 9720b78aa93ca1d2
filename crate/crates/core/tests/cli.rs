use std::process::{Command, Output};

fn polyseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyseq")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_json() {
    let out = polyseq(&["gen", "--L", "2", "--M", "4", "--A", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["exponents"], serde_json::json!([0, 0, 2, 4, 0, 4, 2, 0]));
    assert_eq!(v["D"], 8);
}

#[test]
fn gen_special_csv() {
    let out = polyseq(&["gen", "--special", "chu", "--M", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().nth(1), Some("1,5,1,5,10,0 2 6 2 0"));
}

#[test]
fn invalid_parameters_exit_2() {
    assert_eq!(polyseq(&["gen", "--L", "3", "--M", "4", "--A", "0"]).status.code(), Some(2));
    assert_eq!(polyseq(&["gen", "--L", "2", "--M", "4", "--A", "1"]).status.code(), Some(2));
    assert_eq!(polyseq(&["gen", "--special", "milewski", "--G", "2"]).status.code(), Some(2));
}

#[test]
fn length_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_polyseq"))
        .args(["gen", "--special", "frank", "--M", "4"])
        .env("POLYSEQ_MAX_N", "15")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));
}

#[test]
fn analyze_exact() {
    let out = polyseq(&["analyze", "--L", "3", "--M", "9", "--A", "1", "--exact"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["metrics"]["perfect_exact"], true);
    assert_eq!(v["certificate"]["method"], "exact_cyclotomic");
    assert_eq!(v["acyclic"].as_array().unwrap().len(), 27);
}

#[test]
fn verify_small_grid() {
    let out = polyseq(&["verify", "--max-M", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for check in ["perfect", "prop41", "prop42", "claims"] {
        assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains(check)), "{text}");
    }
    let out = polyseq(&["verify", "--max-M", "6", "--claims"]);
    assert!(!stdout(&out).contains("prop41"));
}

#[test]
fn sweep_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let out = polyseq(&["sweep", "--family", "frank", "--sizes", "2..4", "--out", path.to_str().unwrap(), "--format", "json", "--verify"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);

    let out = polyseq(&["sweep", "--family", "milewski", "--sizes", "2:1", "--workers", "2"]);
    assert!(stdout(&out).starts_with("family,L,M,A,N,psl"));

    let out = polyseq(&["sweep", "--family", "lm", "--sizes", "3:4:0", "--verify"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unwritable_output_exits_3() {
    let out = polyseq(&["sweep", "--family", "chu", "--sizes", "4", "--out", "/nonexistent/dir/s.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn asymptotics_table() {
    let out = polyseq(&["asymptotics", "--family", "chu", "--max-N", "256"]);
    assert!(out.status.success());
    let rows: Vec<String> = stdout(&out).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(rows[0], "N,psl_over_sqrtN,energy_over_N32");
    assert_eq!(rows.len(), 1 + 8);
}
