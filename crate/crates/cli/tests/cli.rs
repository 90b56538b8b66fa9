use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const L7A5: &str = r#"{"terms":[{"x":2,"y":1,"c":1},{"x":1,"y":2,"c":1},{"x":2,"y":0,"c":-1},{"x":1,"y":1,"c":-3},{"x":0,"y":2,"c":-1},{"x":1,"y":0,"c":1},{"x":0,"y":1,"c":1}]}"#;
const TREFOIL: &str = r#"{"terms":[{"e":-1,"c":1},{"e":0,"c":-1},{"e":1,"c":1}]}"#;

fn lsf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsf")).args(args).env_remove("LSF_JOBS").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = lsf(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn poincare_sphere_is_an_lspace() {
    let out = lsf(&["seifert", "lspace", "--form", "-2; 1/2,2/3,4/5"]);
    assert_eq!(stdout(&out), "{\"verdict\":\"LSpace\",\"certificate\":\"no-witness(3)\"}\n");
}

#[test]
fn classify_from_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(L7A5.as_bytes()).unwrap();
    let arg = format!("@{}", file.path().display());
    let out = lsf(&["alex", "classify", "--poly2", &arg, "--omega", "1"]);
    assert_eq!(stdout(&out), "{\"case\":3,\"slope\":2}\n");
}

#[test]
fn census_of_genus_one_is_the_trefoil() {
    let out = lsf(&["braid", "census", "--genus", "1"]);
    let lines: Vec<&str> = stdout(&out).lines().collect();
    assert_eq!(lines.len(), 1);
    let entry: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(entry["alexander"], serde_json::from_str::<Value>(TREFOIL).unwrap());
    assert_eq!(entry["representative"]["letters"], serde_json::json!([1, 1, 1]));
}

#[test]
fn census_up_to_streams_in_genus_order() {
    let out = lsf(&["braid", "census", "--genus", "2", "--up-to"]);
    let genera: Vec<u64> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["genus"].as_u64().unwrap())
        .collect();
    assert_eq!(&genera[..2], &[0, 1]);
    assert!(genera.windows(2).all(|w| w[0] <= w[1]));
    assert!(genera.len() > 2);
}

#[test]
fn exit_codes() {
    assert_eq!(lsf(&["seifert", "lspace", "--form", "-1; 1/2,1/0"]).status.code(), Some(2));
    assert_eq!(lsf(&["seifert", "lspace", "--form", "-1; 1/2,x"]).status.code(), Some(2));
    assert_eq!(
        lsf(&["alex", "classify", "--poly2", "{\"terms\":[{\"x\":1,\"x\":2,\"y\":0,\"c\":1}]}", "--omega", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lsf(&["alex", "classify", "--poly2", "@/nonexistent/poly.json", "--omega", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(lsf(&["seifert", "family", "--family", "-1; 1/2; 2,1,1,2"]).status.code(), Some(3));
    assert_eq!(lsf(&["braid", "genus", "--word", "1 1"]).status.code(), Some(3));
    assert_eq!(lsf(&["braid", "twisted-torus", "--p", "-3", "--q", "2", "--n", "3"]).status.code(), Some(3));
    let bad = r#"{"terms":[{"x":1,"y":0,"c":2}]}"#;
    let out = lsf(&["alex", "verify", "--poly2", bad, "--omega", "1", "--delta-c", r#"{"terms":[{"e":0,"c":1}]}"#]);
    assert_eq!(out.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], false);
    let stderr = String::from_utf8_lossy(&lsf(&["seifert", "lspace", "--form", "-1; 1/2,1/0"]).stderr).to_string();
    assert!(stderr.contains("--form"), "{stderr}");
}

#[test]
fn twisted_alexander_round_trips_into_cert() {
    let report = json(&["alex", "twist", "--poly2", L7A5, "--omega", "1", "--n", "2"]);
    assert_eq!(report["genus_lower_bound"], 3);
    let poly = report["alexander"].to_string();
    let cert = json(&["alex", "cert", "--poly", &poly]);
    assert!(cert["candidate"].is_boolean());
    let again = json(&["alex", "staircase", "--poly", TREFOIL]);
    assert_eq!(again["generators"], serde_json::json!([[1, 0], [0, -1], [-1, -2]]));
}

#[test]
fn torus_closed_form_matches() {
    let report = json(&["braid", "torus", "--p", "-5", "--q", "3"]);
    assert_eq!(report["alexander"], report["closed_form"]);
    assert_eq!(report["sign"], "negative");
    assert_eq!(report["genus"], 4);
}

#[test]
fn homology_commands() {
    assert_eq!(json(&["homology", "snf", "--matrix", "[[2,4],[6,8]]"])["diagonal"], serde_json::json!([2, 4]));
    let h1 = json(&["homology", "h1", "--matrix", "[[2,0],[0,0]]"]);
    assert_eq!((h1["order"].as_i64(), h1["free_rank"].as_i64()), (Some(0), Some(1)));
    let surgery = json(&["homology", "surgery", "--surgery", r#"{"linking":[[0,3],[3,0]],"framings":["4","0"]}"#]);
    assert_eq!(surgery["order"], 9);
    let dets = json(&[
        "homology",
        "family-det",
        "--a11",
        "1",
        "--a12",
        "2",
        "--a21",
        "3",
        "--p",
        "2",
        "--q",
        "1",
        "--window",
        "1,4",
    ]);
    let values: Vec<i64> = dets["dets"].as_array().unwrap().iter().map(|d| d["det"].as_i64().unwrap()).collect();
    let step = dets["step"].as_i64().unwrap();
    assert!(values.windows(2).all(|w| (w[1] - w[0]).abs() == step));
}

#[test]
fn family_summary_omits_members() {
    let full = json(&["seifert", "family", "--family", "-1; 1/2,1/2; 1,0,0,1", "--window", "-5,5"]);
    assert_eq!(full["members"].as_array().unwrap().len(), 11);
    assert_eq!(full["limit_verdict"]["verdict"], "NotLSpace");
    let summary = json(&["seifert", "family", "--family", "-1; 1/2,1/2; 1,0,0,1", "--window", "-5,5", "--summary"]);
    assert!(summary.get("members").is_none());
}

#[test]
fn jobs_from_environment() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_lsf"))
            .args(["alex", "window", "--poly2", L7A5, "--omega", "1", "--window", "-100,100"])
            .env("LSF_JOBS", jobs)
            .output()
            .unwrap()
    };
    let (one, four) = (run("1"), run("4"));
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn table_output_is_readable() {
    let out = lsf(&["--format", "table", "braid", "census", "--genus", "1"]);
    let text = stdout(&out);
    assert!(text.contains("t - 1 + t^-1"), "{text}");
    let out = lsf(&["--format", "table", "seifert", "lspace", "--form", "-1; 1/2,1/3,1/7"]);
    assert!(stdout(&out).starts_with("verdict"));
}
