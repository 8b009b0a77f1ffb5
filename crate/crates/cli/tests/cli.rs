use std::path::PathBuf;

use serde_json::Value;

use quiver_tilt_cli::{run, Outcome, EXIT_ASSERTION, EXIT_OK, EXIT_TRUNCATED, EXIT_USAGE};

fn corpus(name: &str) -> String {
    format!("{}/../../corpus/{name}.alg", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str, text: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("quiver-tilt").chain(args.iter().copied()))
}

fn report(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}{}", o.stdout, o.stderr))
}

#[test]
fn point_algebra_has_dimension_one() {
    let path = scratch("point.alg", "vertex v\n");
    let o = cli(&["basis", "--algebra", &path]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let r = report(&o);
    assert_eq!(r["result"]["dimension"], 1);
    assert_eq!(r["result"]["basis"], serde_json::json!(["e_v"]));
}

#[test]
fn report_header() {
    let o = cli(&["coxeter", "--algebra", &corpus("kronecker")]);
    assert_eq!(o.code, EXIT_OK);
    let r = report(&o);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["tool"], "quiver-tilt");
    assert_eq!(r["truncated"], false);
    assert_eq!(r["command"]["verb"]["verb"], "coxeter");
    assert_eq!(r["input_sha256"].as_str().unwrap().len(), 64);
    assert_eq!(r["field"], serde_json::json!({"kind": "prime", "p": 101}));
    assert!(o.stdout.ends_with("}\n"));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        vec!["enumerate-tilting", "--algebra"],
        vec!["witnesses", "--algebra"],
        vec!["probe-findim", "--dim-bound", "3", "--algebra"],
    ] {
        let mut full = args.clone();
        let path = corpus("ex211");
        full.push(&path);
        let first = cli(&full);
        let second = cli(&full);
        assert_eq!(first.code, EXIT_OK);
        assert_eq!(first, second);
    }
}

#[test]
fn field_override() {
    let o = cli(&["basis", "--field", "Q", "--algebra", &corpus("ex211")]);
    assert_eq!(o.code, EXIT_OK);
    let r = report(&o);
    assert_eq!(r["field"]["kind"], "rational");
    assert_eq!(r["result"]["dimension"], 5);
    let o = cli(&["basis", "--field", "F:4", "--algebra", &corpus("ex211")]);
    assert_eq!(o.code, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["basis"]).code, EXIT_USAGE);
    assert_eq!(cli(&["basis", "--algebra", "/nonexistent/file.alg"]).code, EXIT_USAGE);
    let bad = scratch("bad.alg", "vertex x\narrow a x y\n");
    let o = cli(&["basis", "--algebra", &bad]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("`y`"), "{}", o.stderr);
    assert!(o.stdout.is_empty());
    let o = cli(&["corner-delete", "--vertex", "w", "--algebra", &corpus("ex211")]);
    assert_eq!(o.code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn truncated_search_exits_three() {
    let o = cli(&["enumerate-exceptional", "--cap", "1", "--algebra", &corpus("ex211")]);
    assert_eq!(o.code, EXIT_TRUNCATED);
    assert_eq!(report(&o)["truncated"], true);
}

#[test]
fn missed_expectation_exits_two() {
    let local = scratch("dual_numbers.alg", "vertex x\narrow a x x\nrel a*a\n");
    let o = cli(&["endo", "--expect", &local, "--algebra", &corpus("ex211")]);
    assert_eq!(o.code, EXIT_ASSERTION);
    // only one of the three tilting complexes has endomorphism algebra A
    let o = cli(&["endo", "--expect", &corpus("ex211"), "--algebra", &corpus("ex211")]);
    assert_eq!(o.code, EXIT_ASSERTION);
    let found: Vec<bool> = report(&o)["result"]["endomorphism_algebras"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["expected"]["opposite"]["found"].as_bool().unwrap())
        .collect();
    assert_eq!(found.iter().filter(|&&b| b).count(), 1);
    let o = cli(&["endo", "--expect", &corpus("local3"), "--algebra", &corpus("local3")]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
}

#[test]
fn output_file() {
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("coxeter.json");
    let o = cli(&["coxeter", "--algebra", &corpus("a2"), "--out", &out.display().to_string()]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["result"]["charpoly"], serde_json::json!(["1", "1", "1"]));
}
