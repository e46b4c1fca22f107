use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use hyperfuse_cli::{AnalysisReport, Body, ExitStatus, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperfuse"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let mut full = vec!["catalog", "build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let o = run(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    path.to_str().unwrap().to_string()
}

fn json(args: &[&str]) -> (AnalysisReport, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    let report = AnalysisReport::from_json(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (report, o.status.code().unwrap())
}

fn exact(v: &Value) -> &str {
    match v {
        Value::Scalar { exact, .. } => exact,
        other => panic!("not a scalar: {other:?}"),
    }
}

fn verdict(r: &AnalysisReport, title: &str) -> (bool, String) {
    match &r.section(title).unwrap_or_else(|| panic!("no section {title}")).body {
        Body::Verdict { passed, text } => (*passed, text.clone()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn piped_quotient_and_ringtest() {
    let ng = run(&["catalog", "build", "near_group", "--group", "Z2", "--m", "2"]);
    assert!(ng.status.success());
    let q = run_stdin(&["quotient", "--by", "e,g", "--emit"], &stdout(&ng));
    assert!(q.status.success(), "{}", stderr(&q));
    let report = stderr(&q);
    assert!(report.contains("(2+1*sqrt(3))/1"), "{report}");
    assert!(report.contains("PASS: D(K) = D(L)·D(K//L)"));
    let rt = run_stdin(&["ringtest"], &stdout(&q));
    assert_eq!(rt.status.code(), Some(0));
    assert!(stdout(&rt).contains("fails: coefficient sqrt(2) not integral"), "{}", stdout(&rt));
}

#[test]
fn quotient_json_values() {
    let dir = tempfile::tempdir().unwrap();
    let ng = build(dir.path(), "ng.toml", &["near_group", "--group", "Z2", "--m", "2"]);
    let (r, code) = json(&["quotient", &ng, "--by", "e,g"]);
    assert_eq!(code, 0);
    assert_eq!(exact(r.entry("weights", "D(K)").unwrap()), "(6+2*sqrt(3))/1");
    assert_eq!(exact(r.entry("weights", "D(L)").unwrap()), "2");
    assert_eq!(exact(r.entry("weights", "D(K//L)").unwrap()), "(3+1*sqrt(3))/1");
    assert!(verdict(&r, "morphism").0);
    assert_eq!(r.exit_status, ExitStatus::Ok);
}

#[test]
fn quotient_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ng = build(dir.path(), "ng.toml", &["near_group", "--group", "Z3", "--m", "3"]);
    let out = dir.path().join("q.toml");
    let o = run(&["quotient", &ng, "--by", "0,1,2", "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = run(&["verify", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let parsed = hyperfuse::load(&text).unwrap();
    assert_eq!(parsed.object.hypergroup().unwrap().size(), 2);
}

#[test]
fn verify_and_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let ising = build(dir.path(), "ising.toml", &["tambara_yamagami", "--group", "Z2"]);
    let o = run(&["verify", &ising]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));

    let bad = dir.path().join("bad.toml");
    std::fs::write(
        &bad,
        "[hypergroup]\nname = \"bad\"\nelements = [\"e\", \"a\"]\ninvolution = [\"e\", \"a\"]\n\n[products]\n\"a*a\" = { \"e\" = \"1/2\", \"a\" = \"1/4\" }\n",
    )
    .unwrap();
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sum to 1"), "{}", stderr(&o));

    let o = run_stdin(&["info"], "not toml at all");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(":1:"), "{}", stderr(&o));

    let o = run(&["verify", dir.path().join("missing.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn undecidable_and_noncommutative_characters() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = build(dir.path(), "z3.toml", &["group", "--group", "Z3"]);
    let o = run(&["chars", &z3]);
    assert_eq!(o.status.code(), Some(3));
    let (r, code) = json(&["chars", &z3]);
    assert_eq!(code, 3);
    assert_eq!(r.exit_status, ExitStatus::Undecidable);

    let s3 = build(dir.path(), "s3.toml", &["group", "--group", "S3"]);
    assert_eq!(run(&["chars", &s3]).status.code(), Some(2));
}

#[test]
fn info_and_characters() {
    let dir = tempfile::tempdir().unwrap();
    let k = build(dir.path(), "k.toml", &["two_element", "--d", "(3+1*sqrt(5))/2"]);
    let (r, code) = json(&["info", &k]);
    assert_eq!(code, 0);
    assert_eq!(exact(r.entry("summary", "D(K)").unwrap()), "(5+1*sqrt(5))/2");

    let o = run(&["chars", &k]);
    assert!(stdout(&o).contains("(-3+1*sqrt(5))/2"), "{}", stdout(&o));

    let (r, _) = json(&["dual", &k]);
    assert!(verdict(&r, "self-duality").0);
}

#[test]
fn grading_and_chain() {
    let dir = tempfile::tempdir().unwrap();
    let ty = build(dir.path(), "ty.toml", &["tambara_yamagami", "--group", "Z3", "--as-hypergroup"]);
    let (r, _) = json(&["grading", &ty]);
    match r.entry("universal grading", "|G_K|").unwrap() {
        Value::Int(2) => {}
        other => panic!("{other:?}"),
    }
    let (r, _) = json(&["chain", &ty]);
    assert!(verdict(&r, "nilpotency").0);
    assert!(verdict(&r, "weight identity").0);

    let k = build(dir.path(), "k3.toml", &["two_element", "--d", "3"]);
    let (r, _) = json(&["chain", &k]);
    assert!(!verdict(&r, "nilpotency").0);
}

#[test]
fn subs_cosets_unitring() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = build(dir.path(), "s3.toml", &["group", "--group", "S3"]);
    let o = run(&["subs", &s3]);
    assert!(o.status.success());
    let (r, _) = json(&["subs", &s3]);
    match &r.section("subhypergroups").unwrap().body {
        Body::Table { rows, .. } => assert_eq!(rows.len(), 6),
        other => panic!("{other:?}"),
    }
    let o = run(&["cosets", &s3, "--left", "e,(12)", "--right", "e,(12)"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["subs", &s3, "--bound", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["unitring", &s3]);
    assert!(o.status.success());
}

#[test]
fn convert_and_index() {
    let dir = tempfile::tempdir().unwrap();
    let fib = build(dir.path(), "fib.toml", &["fibonacci"]);
    let out = dir.path().join("kf.toml");
    let o = run(&["convert", &fib, "-o", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("[hypergroup]"));
    let rt = run(&["ringtest", out.to_str().unwrap()]);
    assert!(stdout(&rt).contains("passes"), "{}", stdout(&rt));

    let (r, code) = json(&["index", "--dk", "6", "--dh", "2", "--mu", "1/2"]);
    assert_eq!(code, 0);
    assert!(r.to_json().contains("\"18\""));

    let ng = build(dir.path(), "ng.toml", &["near_group", "--group", "Z2", "--m", "2"]);
    let (r, _) = json(&["index", &ng, "--by", "e,g"]);
    assert!(r.to_json().contains("(3+1*sqrt(3))/1"));
}

#[test]
fn walk_csv() {
    let dir = tempfile::tempdir().unwrap();
    let k = build(dir.path(), "k2.toml", &["two_element", "--d", "2"]);
    let csv = dir.path().join("walk.csv");
    let o = run(&["walk", &k, "--probe", "c1", "--steps", "2000", "--seed", "5", "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("step,state"));
    assert_eq!(lines.next(), Some("0,c0"));
    assert_eq!(lines.next(), Some("1,c1"));
    assert_eq!(text.lines().count(), 2002);

    let again = run(&["walk", &k, "--probe", "c1", "--steps", "2000", "--seed", "5", "--csv", "-"]);
    assert_eq!(stdout(&again), text);

    let o = run(&["walk", &k, "--probe", "c1", "--steps", "10", "--runs", "3", "--csv", "-"]);
    let out = stdout(&o);
    assert!(out.starts_with("seed,step,state\n"));
    assert_eq!(out.lines().count(), 1 + 3 * 11);

    let o = run(&["walk", &k, "--probe", "2*c1", "--steps", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_reports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ising = build(dir.path(), "ising.toml", &["tambara_yamagami", "--group", "Z2"]);
    for cmd in ["verify", "info", "subs", "grading", "chain", "unitring", "chars", "dual", "ringtest"] {
        let o = run(&["--json", cmd, &ising]);
        assert!(o.status.success(), "{cmd}: {}", stderr(&o));
        let r = AnalysisReport::from_json(&stdout(&o)).unwrap();
        assert_eq!(r.command, cmd);
        assert_eq!(AnalysisReport::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn precision_floor_env() {
    let o = bin().args(["catalog", "list"]).env("HYPERFUSE_PRECISION_FLOOR", "junk").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
