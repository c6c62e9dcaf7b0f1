use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn leapx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leapx")).args(args).env_remove("LEAPX_MAX_N").output().expect("spawn leapx")
}

fn leapx_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_leapx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn leapx");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap()
}

fn validate(instance: &Value, def: Option<&str>) {
    let mut s = schema();
    if let Some(def) = def {
        let defs = s["$defs"].clone();
        s = s["$defs"][def].clone();
        s["$defs"] = defs;
    }
    let validator = jsonschema::validator_for(&s).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn indices_of_c4_from_stdin() {
    let out = leapx_stdin(&["indices", "-"], "Cr\n");
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    let row = &rows[0];
    assert_eq!(row["graph6"], "Cr");
    assert_eq!(row["LxiC"], 8);
    assert_eq!(row["M1"], 16);
    assert_eq!(row["xiC"], 16);
    validate(row, Some("indicesRow"));
}

#[test]
fn indices_csv_has_a_header_and_one_line_per_graph() {
    let out = leapx_stdin(&["indices", "-", "--output", "csv"], "Cr\nBw\n");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("source,graph6,n,m,M1"));
}

#[test]
fn structural_sweep_is_clean_and_matches_the_schema() {
    let out = leapx(&["verify", "--claims", "lem-2.2,lem-2.4", "--family", "all-connected", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    validate(&report, None);
    assert_eq!(report["base_graphs"], 772);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn violations_exit_with_two_and_still_report() {
    let out = leapx(&["verify", "--claims", "cor-2.11", "--family", "stars", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let report = json(&out);
    validate(&report, None);
    let v = &report["violations"][0];
    assert_eq!(v["claim_id"], "cor-2.11");
    assert_eq!(v["status"], "VIOLATION");
    assert!(v["witness"].is_object());
}

#[test]
fn seeded_sweeps_are_byte_identical() {
    let args = ["verify", "--claims", "thm-2.5,thm-2.10", "--family", "nonstar-trees", "--max-n", "9", "--samples", "15", "--seed", "11"];
    let a = leapx(&args);
    let b = leapx(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    validate(&json(&a), None);
}

#[test]
fn random_family_without_seed_is_a_usage_error() {
    let out = leapx(&["verify", "--family", "trees", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(leapx(&["verify", "--claims", "no-such-claim"]).status.code(), Some(1));
    assert_eq!(leapx(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(leapx(&["construct", "--op", "X", "name:P4"]).status.code(), Some(1));
    assert_eq!(leapx(&["indices", "/nonexistent/graphs.g6"]).status.code(), Some(1));
    assert_eq!(leapx(&["--help"]).status.code(), Some(0));
}

#[test]
fn counterexample_is_the_triangle() {
    let out = leapx(&["counterexample", "--property", "yarahmadi-s-ecc", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    validate(&report, Some("counterexampleReport"));
    assert_eq!(report["found"], true);
    let c = &report["counterexample"];
    assert_eq!(c["graph6"], "Bw");
    assert_eq!(c["ecc_g"], 1);
    assert_eq!(c["ecc_s"], 3);
    assert_eq!(c["expected"], 2);
}

#[test]
fn counterexample_restricted_to_bipartite_finds_none() {
    let out = leapx(&["counterexample", "--property", "yarahmadi-s-ecc", "--max-n", "5", "--only", "bipartite"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["found"], false);
}

#[test]
fn construct_subdivision_of_c4() {
    let out = leapx(&["construct", "--op", "S", "name:C4"]);
    assert_eq!(out.status.code(), Some(0));
    let built = json(&out);
    assert_eq!(built["n"], 8);
    assert_eq!(built["m"], 8);
    validate(&built["indices"], Some("indexReport"));

    let line = json(&leapx(&["construct", "--op", "line", "name:C8"]));
    assert_eq!(built["indices"], line["indices"]);
}

#[test]
fn join_and_corona_sizes() {
    let j = json(&leapx(&["join", "--kind", "vertex", "name:P3", "name:K2"]));
    assert_eq!(j["n"], 3 + 2 + 2);
    let vej = json(&leapx(&["join", "--kind", "vertex-edge", "name:P3", "name:K2", "name:K1"]));
    assert_eq!(vej["n"], 3 + 2 + 2 + 1);
    let c = json(&leapx(&["corona", "--kind", "S", "name:P3", "name:K1", "name:K2"]));
    assert_eq!(c["n"], 5 + 3 + 2 * 2);
}

#[test]
fn max_n_env_lowers_the_cap() {
    let run = |max_n: &str| {
        Command::new(env!("CARGO_BIN_EXE_leapx"))
            .args(["verify", "--claims", "lem-2.2", "--max-n", max_n])
            .env("LEAPX_MAX_N", "4")
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(1));
    let out = run("4");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["base_graphs"], 44);
}
