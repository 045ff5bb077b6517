use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subatomic")).args(args).output().expect("spawn subatomic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).expect("schema compiles")
}

fn assert_schema(v: &Value) {
    let s = schema();
    let errors: Vec<String> = s.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).take(5).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

fn outcome(report: &Value, property: &str) -> String {
    report["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["property"] == property)
        .unwrap_or_else(|| panic!("no record for {property}"))["outcome"]
        .as_str()
        .unwrap()
        .to_string()
}

#[test]
fn classify_d23() {
    let o = run(&["classify", "d23"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_schema(&r);
    assert_eq!(outcome(&r, "furstenberg"), "holds");
    assert_eq!(outcome(&r, "quasi_atomic"), "refuted");
}

#[test]
fn classify_ma_qplus_is_antimatter() {
    let o = run(&["classify", "ma_qplus"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(outcome(&json(&o), "not_antimatter"), "refuted");
}

#[test]
fn classify_unknown_domain() {
    let o = run(&["classify", "bogus"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    for tag in ["d8", "d23", "ma_s4", "appb"] {
        assert!(err.contains(tag), "{err}");
    }
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["matrix", "--no-such-flag"]).status.code(), Some(1));
    assert_eq!(run(&["atoms", "qplus", "--format", "yaml"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "d12", "--truncation", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn atoms_appendix_a_includes_seven_e1() {
    let o = run(&["atoms", "appendix_a", "--index-bound", "2", "--entry-bound", "14"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_schema(&r);
    let atoms: Vec<&str> = r["atoms"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()).collect();
    assert!(atoms.contains(&"limit=0; {1:7}"), "{atoms:?}");
    assert!(!atoms.contains(&"limit=0; {1:14}"));
    assert_eq!(r["count"].as_u64().unwrap() as usize, atoms.len());
}

#[test]
fn atoms_qplus_empty() {
    let r = json(&run(&["atoms", "qplus"]));
    assert_eq!(r["atoms"], Value::Array(vec![]));
    let csv = stdout(&run(&["atoms", "qplus", "--format", "csv"]));
    assert_eq!(csv, "atom\n");
}

#[test]
fn atoms_deterministic() {
    for fmt in ["json", "markdown", "csv"] {
        let a = run(&["atoms", "appendix_a", "--format", fmt]);
        let b = run(&["atoms", "appendix_a", "--format", fmt]);
        assert_eq!(a.stdout, b.stdout, "{fmt}");
    }
}

#[test]
fn atoms_section_four_bounds_change_output() {
    let small = json(&run(&["atoms", "section_four", "--bounds-index-bound", "1"]));
    let large = json(&run(&["atoms", "section_four", "--bounds-index-bound", "3"]));
    assert!(small["count"].as_u64() < large["count"].as_u64());
}

#[test]
fn verify_single_tags_pass() {
    for tag in ["lemma14", "example9", "lemma15", "example11"] {
        let o = run(&["verify", tag]);
        let r = json(&o);
        assert_schema(&r);
        assert_eq!(o.status.code(), Some(0), "{tag}: {r:#}");
        assert_eq!(r["passed"], true);
    }
}

#[test]
fn verify_unknown_tag() {
    let o = run(&["verify", "lemma99"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lemma14"));
}

#[test]
fn verify_all_aggregates() {
    let o = run(&["verify", "all"]);
    let r = json(&o);
    assert_schema(&r);
    let tags = r["tags"].as_array().unwrap();
    assert_eq!(tags.len(), 13);
    let all = tags.iter().all(|t| t["passed"] == true);
    assert_eq!(r["passed"], all);
    assert_eq!(o.status.code(), Some(if all { 0 } else { 2 }));
}

#[test]
fn matrix_report_validates_and_is_deterministic() {
    let a = run(&["matrix"]);
    let b = run(&["matrix"]);
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_schema(&r);
    assert_eq!(r["records"].as_array().unwrap().len(), 9 * 9);
    assert_eq!(r["dag_consistency"]["outcome"], "holds");
    let all_agree = r["records"].as_array().unwrap().iter().all(|x| x["agrees"] == true);
    assert_eq!(a.status.code(), Some(if all_agree { 0 } else { 2 }));
    let open: Vec<&str> = r["separations"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["status"]["status"] == "open")
        .map(|s| s["item"].as_str().unwrap())
        .collect();
    assert_eq!(open, ["iii", "iv"]);
}

#[test]
fn matrix_text_formats() {
    let md = stdout(&run(&["matrix", "--format", "markdown"]));
    assert!(md.starts_with("| domain | property |"));
    assert!(md.contains("| (iii) |"));
    let csv = stdout(&run(&["matrix", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("domain,property,outcome,certificate,expected,agrees"));
    assert_eq!(lines.count(), 81);
}

#[test]
fn config_file_with_flag_override() {
    let dir = std::env::temp_dir().join(format!("subatomic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cfg.toml");
    std::fs::write(&path, "format = \"csv\"\nseed = 5\n\n[bounds]\nindex_bound = 3\n").unwrap();
    let p = path.to_str().unwrap();
    let from_file = run(&["atoms", "section_four", "--config", p]);
    assert!(stdout(&from_file).starts_with("atom\n"));
    let by_flag = run(&["atoms", "section_four", "--format", "csv", "--bounds-index-bound", "3"]);
    assert_eq!(from_file.stdout, by_flag.stdout);
    let overridden = run(&["atoms", "section_four", "--config", p, "--format", "json"]);
    assert_eq!(json(&overridden)["bounds"]["index_bound"], 3);
    std::fs::write(&path, "colour = \"blue\"\n").unwrap();
    assert_eq!(run(&["matrix", "--config", p]).status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seed_changes_samples_but_stays_reproducible() {
    let a = run(&["classify", "d8", "--seed", "7"]);
    let b = run(&["classify", "d8", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["classify", "d8", "--seed", "8"]);
    assert_eq!(c.status.code(), Some(0));
}
