use std::process::{Command, Output};

use invpat_core::LENGTH_THREE_PATTERNS;
use proptest::prelude::*;
use serde_json::Value;

fn invpat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invpat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn count_example() {
    let o = invpat(&["count", "--pattern", "021", "--n", "7", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"count":"1806","method":"formula","n":7,"pattern":"021"}"#);
}

#[test]
fn auto_falls_back_to_brute_force() {
    let o = invpat(&["count", "--pattern", "010", "--n", "7"]);
    let v = json(&o);
    assert_eq!(v["method"], "brute");
    assert_eq!(v["count"], "979");
    let o = invpat(&["count", "--pattern", "000", "--n", "7"]);
    assert_eq!(json(&o)["method"], "formula");
}

#[test]
fn several_patterns_at_once() {
    let o = invpat(&["count", "--pattern", "201", "--pattern", "210", "--n", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let both: u64 = stdout(&o).trim().parse().unwrap();
    assert!(both < 118);
}

#[test]
fn map_example_is_plain_text() {
    let o = invpat(&["map", "--bijection", "rho", "--dir", "fwd", "--input", "0,1,0,1,0,2,5,7,7,7,9,0,10,11,12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "UUDUFUDUFDDDUUDUDDUUUFDDD\n");
    let back = invpat(&["map", "--bijection", "rho", "--dir", "inv", "--input", "UUDUFUDUFDDDUUDUDDUUUFDDD"]);
    assert_eq!(stdout(&back).trim(), "0,1,0,1,0,2,5,7,7,7,9,0,10,11,12");
}

#[test]
fn exit_codes() {
    assert_eq!(invpat(&["count", "--pattern", "0a1", "--n", "3"]).status.code(), Some(2));
    assert_eq!(invpat(&["count", "--pattern", "120", "--n", "12"]).status.code(), Some(2));
    assert_eq!(invpat(&["count", "--pattern", "120", "--n", "4", "--method", "formula"]).status.code(), Some(2));
    assert_eq!(invpat(&["map", "--bijection", "kappa", "--input", "0,1,1"]).status.code(), Some(2));
    assert_eq!(invpat(&["map", "--bijection", "rho", "--input", "0,2"]).status.code(), Some(2));
    assert_eq!(invpat(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(invpat(&["conjecture", "--id", "nope"]).status.code(), Some(2));
    assert_eq!(invpat(&["frobnicate"]).status.code(), Some(2));
    let forced = invpat(&["count", "--pattern", "001", "--n", "12", "--method", "brute", "--force"]);
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(json(&forced)["count"], "2048");
}

#[test]
fn verify_all_passes() {
    let o = invpat(&["verify", "--suite", "all", "--n-max", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert!(v["reports"].as_array().unwrap().len() > 30);
}

#[test]
fn conjectures_and_oeis() {
    for id in ["entringer", "schroder_ascents"] {
        let o = invpat(&["conjecture", "--id", id, "--n-max", "7", "--format", "text"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).starts_with("PASS"));
    }
    let o = invpat(&["oeis", "--offline", "--id", "A000110"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["reports"][0]["passed"], true);
}

#[test]
fn oeis_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b000110.txt"), "0 1\n1 1\n2 2\n3 5\n4 16\n").unwrap();
    let o = invpat(&["oeis", "--id", "A000110", "--cache-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["reports"][0]["counterexample"]["index"], 4);
}

#[test]
fn dist_and_tables() {
    let o = invpat(&["dist", "--pattern", "011", "--n", "4", "--stat", "zeros", "--format", "csv"]);
    assert_eq!(stdout(&o), "value,count\n1,1\n2,7\n3,6\n4,1\n");
    let o = invpat(&["dump-table", "--table", "Y", "--n-max", "7"]);
    let v = json(&o);
    let total: u64 = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["index"][0] == 7)
        .map(|c| c["value"].as_str().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 1806);
    assert_eq!(invpat(&["dump-table", "--table", "nope", "--n-max", "3"]).status.code(), Some(2));
}

#[test]
fn sequence_csv() {
    let o = invpat(&["sequence", "--pattern", "012", "--n-max", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,count\n1,1\n2,2\n3,5\n4,13\n5,34\n");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn brute_and_formula_agree(idx in 0usize..LENGTH_THREE_PATTERNS.len(), n in 1usize..=8) {
        let p = LENGTH_THREE_PATTERNS[idx];
        let f = invpat(&["count", "--pattern", p, "--n", &n.to_string(), "--method", "formula"]);
        let b = invpat(&["count", "--pattern", p, "--n", &n.to_string(), "--method", "brute"]);
        prop_assert_eq!(b.status.code(), Some(0));
        if matches!(p, "120" | "010" | "100") {
            prop_assert_eq!(f.status.code(), Some(2));
        } else {
            prop_assert_eq!(json(&f)["count"].clone(), json(&b)["count"].clone());
        }
    }
}
