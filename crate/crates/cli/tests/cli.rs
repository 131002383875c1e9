use std::path::PathBuf;
use std::process::{Command, Output};

use pgl2q::harness::validate_json;

fn pgl2q(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgl2q")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pgl2q(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("pgl2q-cli-{}-{name}", std::process::id()))
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["eval", "K V"]), "[[1,1],[0,1]]");
    assert_eq!(stdout(&["orderpoly", "5"]), "5 10 1");
    assert_eq!(stdout(&["order", "[[1,-1],[1,1]]"]), "finite 4 tau=2");
}

#[test]
fn single_operations() {
    assert_eq!(stdout(&["decompose", "[[2,1],[1,1]]"]), "H(2) T V H(2)^-1 U T");
    assert_eq!(stdout(&["apply", "[[1,1],[0,1]]", "-3"]), "-2");
    assert_eq!(stdout(&["apply", "[[0,1],[1,0]]", "0"]), "inf");
    assert_eq!(stdout(&["pdet", "[[1,0],[0,-12]]"]), "-3");
    assert_eq!(stdout(&["bsnf", "-p", "2", "H(2)^-1 T^3 H(2)"]), "u=1 m=3 v=1");
    assert_eq!(stdout(&["order", "[[1,-1],[2,1]]"]), "elliptic-infinite tau=4/3");
    let witness = stdout(&["conjugate", "[[1,1],[-3,1]]"]);
    assert!(witness.ends_with("n=3"), "{witness}");
}

#[test]
fn eval_and_decompose_compose() {
    for m in ["[[7,-3],[12,5]]", "[[0,1],[-6,1]]", "[[5,3],[0,2]]", "[[1,0],[0,1]]"] {
        let word = stdout(&["decompose", m]);
        let back = stdout(&["eval", &word]);
        assert_eq!(back, stdout(&["eval", &stdout(&["decompose", &back])]));
        assert_eq!(back.parse::<pgl2q::ProjMat2>().unwrap(), m.parse().unwrap());
    }
}

#[test]
fn relator_tables() {
    let out = pgl2q(&["relators", "--catalog", "tv", "--pmax", "7"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("tv/II[p=2,q=3]") && l.contains("holds")));
    // (VII) and (VIII) fail as printed, which is the expected outcome.
    let out = pgl2q(&["relators", "--catalog", "involution", "--pmax", "5", "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let vii = json["results"].as_array().unwrap().iter().find(|r| r["id"] == "involution/VII").unwrap();
    assert_eq!(vii["holds"], false);
    assert_eq!(vii["witness"], "[[16,0],[-5,1]]");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "TU"][..],
        &["decompose", "[[1,2],[2,4]]"],
        &["orderpoly", "4"],
        &["bsnf", "-p", "4", "T"],
        &["fuzz", "--mode", "nonsense"],
        &["fuzz", "--mode", "census", "--primes", "3,2"],
        &["eval"],
        &["frobnicate"],
    ] {
        assert_eq!(pgl2q(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn fuzz_reports_are_deterministic_and_valid() {
    for mode in ["soundness", "roundtrip", "census"] {
        let (a, b) = (temp_path(&format!("{mode}-a.json")), temp_path(&format!("{mode}-b.json")));
        for path in [&a, &b] {
            let out = pgl2q(&["fuzz", "--mode", mode, "--seed", "7", "--trials", "300", "--json", path.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0), "{mode}");
        }
        let (ja, jb) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
        assert_eq!(ja, jb, "{mode}");
        validate_json(&ja).unwrap();
        let _ = std::fs::remove_file(a);
        let _ = std::fs::remove_file(b);
    }
}

#[test]
fn fuzz_failures_exit_1() {
    let out = pgl2q(&["fuzz", "--mode", "soundness", "--trials", "20", "--family", "involution/VIII", "--json", "-"]);
    assert_eq!(out.status.code(), Some(1));
    let json = String::from_utf8(out.stdout).unwrap();
    validate_json(&json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 20);
}

#[test]
fn small_probe() {
    let json = stdout(&["fuzz", "--mode", "probe", "--alphabet", "U,V", "--max-word-len", "2", "--json", "-"]);
    validate_json(&json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["counters"]["buckets"], 4);
    assert_eq!(v["counters"]["connected"], 1);
}
