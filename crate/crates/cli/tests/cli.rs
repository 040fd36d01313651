use std::path::PathBuf;
use std::process::{Command, Output};

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .current_dir(workspace())
        .output()
        .expect("binary runs")
}

fn workspace() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn both_methods_agree_on_affine_d4() {
    let o = artin(&["homology", "--type", "tD", "--rank", "4", "--method", "both", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "tD4");
    assert_eq!(v["homology"].as_array().unwrap().len(), 5);
    assert_eq!(v["homology"][4]["free_rank"], 1);
}

#[test]
fn exceptional_affine_table_passes() {
    let o = artin(&["tables", "--suite", "exceptional-affine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.contains("PASS tE8 H8: R")));
    assert!(!out.contains("FAIL"));
}

#[test]
fn absence_certificate_for_matrix_file() {
    let o = artin(&["search", "--matrix", "crates/core/data/no_precise_d2.cox", "--d", "2", "--prove-absence", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["found"], false);
    assert!(v["matching"].is_null());
    assert_eq!(v["certificate"]["d"], 2);
}

#[test]
fn search_output_verifies() {
    let o = artin(&["search", "--type", "F4", "--d", "3", "--seed", "7", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let path = std::env::temp_dir().join(format!("artin-f4-{}.json", std::process::id()));
    std::fs::write(&path, &o.stdout).unwrap();
    let v = artin(&["verify", "--type", "F4", "--d", "3", "--matching", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("precise yes"));
}

#[test]
fn wrong_d_fails_verification() {
    let o = artin(&["matching", "--type", "A", "--rank", "4", "--d", "3", "--json"]);
    let path = std::env::temp_dir().join(format!("artin-a4-{}.json", std::process::id()));
    std::fs::write(&path, &o.stdout).unwrap();
    let v = artin(&["verify", "--type", "A4", "--d", "2", "--matching", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(v.status.code(), Some(1));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["homology", "--type", "E7", "--seed", "3", "--json"];
    assert_eq!(artin(&args).stdout, artin(&args).stdout);
}

#[test]
fn json_parses_back() {
    let o = artin(&["homology", "--type", "H3", "--json"]);
    let v: artin_core::homology::HomologyResult = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.to_string(), stdout(&artin(&["homology", "--type", "H3"])));
}

#[test]
fn exit_codes() {
    assert_eq!(artin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(artin(&["homology", "--type", "Q", "--rank", "3"]).status.code(), Some(2));
    assert_eq!(artin(&["homology", "--type", "E6", "--method", "snf"]).status.code(), Some(3));
    assert_eq!(artin(&["matching", "--type", "E6", "--d", "2"]).status.code(), Some(2));
}
