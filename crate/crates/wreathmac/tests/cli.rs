use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wreathmac"));
    // keep the default cache out of the source tree
    cmd.env("WREATHMAC_CACHE", std::env::temp_dir().join("wreathmac-cli-shared"));
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn wreathmac")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn golden(args: &[&str], name: &str) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}");
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim_end(), fixture(name).trim_end(), "{args:?}");
}

#[test]
fn compute_goldens() {
    golden(&["compute", "--r", "1", "--w", "", "--mu", "[[2]]"], "compute_r1_2.json");
    golden(&["compute", "--r", "3", "--w", "s2 s1 t[1,-1,0]", "--mu", "[[1],[],[]]"], "compute_r3_n1_a.json");
    golden(&["compute", "--r", "3", "--w", "s2 s1 t[1,-1,0]", "--mu", "[[],[1],[]]"], "compute_r3_n1_b.json");
    golden(&["compute", "--r", "3", "--w", "s2 s1 t[1,-1,0]", "--mu", "[[],[],[1]]"], "compute_r3_n1_c.json");
    golden(&["compute", "--r", "3", "--w", "t[0,1,-1]", "--mu", "[[1],[],[1]]"], "compute_r3_nine_terms.json");
}

#[test]
fn factor_and_kostka_goldens() {
    golden(&["factor", "--r", "3", "--mu", "[[],[],[2]]"], "factor_r3_002.json");
    golden(&["kostka", "--r", "3", "--w", "s2 s1 t[1,-1,0]", "--mu", "[[],[1],[]]"], "kostka_r3_n1_b.json");
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = std::env::temp_dir().join(format!("wreathmac-cli-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let dir_s = dir.to_str().unwrap();
    let args = ["kostka", "--r", "2", "--w", "s0 s1", "--mu", "[[1],[1]]", "--cache-dir", dir_s];
    let cold = run(&args);
    assert_eq!(cold.status.code(), Some(0));
    assert!(std::fs::read_dir(&dir).unwrap().next().is_some(), "cache stayed empty");
    let warm = run(&args);
    assert_eq!(cold.stdout, warm.stdout);
    // the env var is honoured the same way
    let via_env = bin().args(&args[..7]).env("WREATHMAC_CACHE", dir_s).output().unwrap();
    assert_eq!(cold.stdout, via_env.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2_with_position() {
    let out = run(&["compute", "--r", "3", "--w", "s1 s9", "--mu", "[[1],[],[]]"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "usage");
    assert_eq!(v["error"]["flag"], "w");
    assert_eq!(v["error"]["position"], 3);

    let out = run(&["compute", "--r", "3", "--w", "s1", "--mu", "[[1],[]]"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["flag"], "mu");

    for args in [&["verify", "--suite", "nope"][..], &["frobnicate"], &["compute", "--r", "3"], &["compute", "--jobs", "0", "--r", "1", "--w", "", "--mu", "[[1]]"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(json(&out)["error"]["kind"], "usage", "{args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn norms_nabla_conjectures_report_true() {
    let base = ["--r", "3", "--w", "s1 t[1,-1,0]", "--mu", "[[1],[1],[]]"];
    let norms = run(&[&["norms"][..], &base].concat());
    assert_eq!(norms.status.code(), Some(0));
    assert_eq!(json(&norms)["holds"], true);

    let nabla = run(&[&["nabla"][..], &base].concat());
    assert_eq!(json(&nabla)["matches_wreath"], true);

    let conj = json(&run(&[&["conjectures"][..], &base].concat()));
    assert_eq!(conj["evidence_only"], true);
    assert!(conj["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true), "{conj}");
}

#[test]
fn toroidal_eigen_reports_both_readings() {
    let out = run(&["toroidal-eigen", "--r", "3", "--mu", "[3,3,2,2]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["identity_as_computed"], true);
    assert!(v["checks"].as_array().unwrap().len() == 6);

    let out = run(&["toroidal-eigen", "--r", "2", "--mu", "[1]"]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "paper-examples", "--jobs", "2"]);
    let v = json(&out);
    assert_eq!(out.status.code(), Some(0), "{v}");
    assert_eq!(v["failed"], 0);
    assert!(v["passed"].as_u64().unwrap() >= 40);
}
