use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const DIM8: &str = "field 101\nvars x, y, z\nrelations x^2, y^2 + x*z, z^2\nsequence s = x, y, z\n";

fn ring_file(src: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

fn gorcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gorcheck")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = gorcheck(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

#[test]
fn exact_sequence_verdicts_and_exit_codes() {
    let f = ring_file(DIM8);
    let path = f.path().to_str().unwrap();
    let (code, v) = json(&["check", "exact-sequence", "s", "--ring", path]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("yes")));
    let (code, v) = json(&["check", "exact-sequence", "y, x, z", "--ring", path]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("no")));
    assert_eq!(v["evidence"]["first_failing_position"], 1);
}

#[test]
fn gorenstein_on_a_fat_point_is_no() {
    let f = ring_file("vars x, y\nrelations x^2, x*y\n");
    let (code, v) = json(&["check", "gorenstein", "--ring", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "no");
    assert_eq!(v["certification"]["kind"], "exact");
}

#[test]
fn koszul_homology_presentations() {
    let f = ring_file("vars x, y\n");
    let (code, v) = json(&["koszul", "homology", "x^2, x*y", "--ring", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v["verdict"].is_null());
    assert_eq!(v["evidence"]["homology"][1]["annihilator"], serde_json::json!(["x"]));
    assert_eq!(v["evidence"]["homology"][2]["length"], 0);
}

#[test]
fn text_and_json_agree() {
    let f = ring_file(DIM8);
    let path = f.path().to_str().unwrap();
    let text = String::from_utf8(gorcheck(&["check", "quasi-gorenstein", "y", "--ring", path]).stdout).unwrap();
    let (_, v) = json(&["check", "quasi-gorenstein", "y", "--ring", path]);
    assert!(text.contains(&format!("verdict: {}", v["verdict"].as_str().unwrap())));
}

#[test]
fn reports_are_deterministic_and_untimed_by_default() {
    let f = ring_file(DIM8);
    let path = f.path().to_str().unwrap();
    let a = gorcheck(&["--format", "json", "resolve", "--module", "x", "--ring", path]).stdout;
    let b = gorcheck(&["--format", "json", "resolve", "--module", "x", "--ring", path]).stdout;
    assert_eq!(a, b);
    assert!(!String::from_utf8(a).unwrap().contains("elapsed_ms"));
    let (_, v) = json(&["--timings", "define", "--ring", path]);
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn output_flag_writes_a_file() {
    let f = ring_file(DIM8);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = gorcheck(&["--format", "json", "--output", out.to_str().unwrap(), "define", "--ring", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["evidence"]["dimension"], 8);
}

#[test]
fn usage_and_engine_errors() {
    assert_eq!(gorcheck(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gorcheck(&["define", "--ring", "/nonexistent/ring"]).status.code(), Some(1));
    let bad = ring_file("vars x, y\nrelations x*y + x^3\n");
    let o = gorcheck(&["define", "--ring", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not homogeneous"));
    let typo = ring_file("vars x, y\nrelations x^^2\n");
    let o = gorcheck(&["define", "--ring", typo.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column"));
}

#[test]
fn corpus_run_passes_and_names_a_flipped_case() {
    let (code, v) = json(&["corpus", "run"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["evidence"]["passed"], v["evidence"]["cases"]);

    let (_, dump) = json(&["corpus", "dump"]);
    let mut cases = dump["evidence"].as_array().unwrap().clone();
    cases.truncate(4);
    let flipped = cases[2]["name"].as_str().unwrap().to_string();
    let expected = cases[2]["expected"].as_str().unwrap();
    cases[2]["expected"] = Value::from(if expected == "yes" { "no" } else { "yes" });
    let file = ring_file(&serde_json::to_string(&cases).unwrap());
    let o = gorcheck(&["corpus", "run", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains(&flipped));
}

#[test]
fn empty_corpus_is_a_vacuous_pass() {
    let file = ring_file("[]");
    let o = gorcheck(&["corpus", "run", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn pfaffian_ideal_of_a_generic_matrix() {
    let (code, v) = json(&["pfaffian-ideal", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["evidence"]["minimal_generators"], 5);
    assert_eq!(v["evidence"]["socle_dimension"], 1);
    assert_eq!(v["evidence"]["complete_intersection"], false);
}

#[test]
fn trivial_extension_by_the_dual_is_gorenstein() {
    let f = ring_file("vars x, y\nrelations x^2, x*y, y^2\n");
    let (_, v) = json(&["trivial-extension", "--with", "dual", "--ring", f.path().to_str().unwrap()]);
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["evidence"]["dim"], 6);
    let (_, v) = json(&["trivial-extension", "--with", "ring", "--ring", f.path().to_str().unwrap()]);
    assert_eq!(v["verdict"], "no");
}
