use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fagnano::io::{InstanceFile, SolutionFile};
use fagnano::{case_detect, CaseTag, Tolerances};

const DART: &str = r#"{"A":[0,0],"B":[4,3],"C":[2,0],"D":[4,-3]}"#;

fn fagnano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fagnano")).args(args).output().unwrap()
}

fn file(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn solve_prints_json_without_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = fagnano(&["solve", "-i", &file(dir.path(), "d.json", DART)]);
    assert_eq!(out.status.code(), Some(0));
    let sol = SolutionFile::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(sol.case, "CaseA");
    assert_eq!(sol.vertices[2].side, "VertexC");
    assert!((sol.perimeter - 3.84).abs() < 1e-12);
}

#[test]
fn solve_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let acute = file(dir.path(), "t.json", r#"{"A":[0,0],"B":[1,0],"C":[0.5,0.8]}"#);
    let obtuse = file(dir.path(), "o.json", r#"{"A":[0,0],"B":[4,0],"C":[1,0.5]}"#);
    let line = file(dir.path(), "l.json", r#"{"A":[0,0],"B":[1,0],"C":[2,0]}"#);
    let sol = SolutionFile::from_json(&String::from_utf8(fagnano(&["solve", "-i", &acute]).stdout).unwrap()).unwrap();
    assert_eq!(sol.case, "Orthic");
    let sol = SolutionFile::from_json(&String::from_utf8(fagnano(&["solve", "-i", &obtuse]).stdout).unwrap()).unwrap();
    assert_eq!(sol.case, "Degenerate");
    assert!((sol.perimeter - 1.0).abs() < 1e-12);
    assert_eq!(fagnano(&["solve", "-i", &line]).status.code(), Some(1));
}

#[test]
fn validation_messages_name_the_constraint() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"A":[0,0],"B":[1,0],"C":[0,1],"D":[1,1]}"#, "NotSimple"),
        (r#"{"A":[0,0],"B":[2,2],"C":[2.5,1.5],"D":[6,-1]}"#, "NotAcuteAt(B)"),
    ];
    for (json, needle) in cases {
        let out = fagnano(&["solve", "-i", &file(dir.path(), "bad.json", json)]);
        assert_eq!(out.status.code(), Some(1));
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains(needle), "{err}");
    }
}

#[test]
fn unknown_fields_and_usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let extra = file(dir.path(), "x.json", r#"{"A":[0,0],"B":[4,3],"C":[2,0],"D":[4,-3],"E":[1,1]}"#);
    assert_eq!(fagnano(&["solve", "-i", &extra]).status.code(), Some(2));
    assert_eq!(fagnano(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fagnano(&["gen", "--count", "1", "--case", "c", "--out", "x"]).status.code(), Some(2));
    let dart = file(dir.path(), "d.json", DART);
    assert_eq!(fagnano(&["verify", "-i", &dart, "--tol", "-1"]).status.code(), Some(2));
}

#[test]
fn gen_respects_the_case_filter() {
    let dir = tempfile::tempdir().unwrap();
    for (arg, want) in [("a", CaseTag::CaseA), ("reduced", CaseTag::Reduced)] {
        let out = dir.path().join(arg);
        let status = fagnano(&["gen", "--seed", "3", "--count", "4", "--case", arg, "--out", out.to_str().unwrap()]);
        assert_eq!(status.status.code(), Some(0));
        let mut names: Vec<_> = fs::read_dir(&out).unwrap().map(|e| e.unwrap().file_name()).collect();
        names.sort();
        assert_eq!(names, ["inst_0001.json", "inst_0002.json", "inst_0003.json", "inst_0004.json"]);
        for name in names {
            let text = fs::read_to_string(out.join(name)).unwrap();
            let inst = InstanceFile::from_json(&text).unwrap().to_instance(&Tolerances::DEFAULT).unwrap();
            let fagnano::io::Instance::Quadrangle(q) = inst else { panic!("quadrangle expected") };
            assert_eq!(case_detect(&q).unwrap().case, want);
        }
    }
}

#[test]
fn render_draws_all_named_points() {
    let dir = tempfile::tempdir().unwrap();
    let inst = file(dir.path(), "d.json", DART);
    let sol = dir.path().join("d.sol.json");
    let svg = dir.path().join("d.svg");
    assert_eq!(fagnano(&["solve", "-i", &inst, "-o", sol.to_str().unwrap()]).status.code(), Some(0));
    let out = fagnano(&["render", "-i", &inst, "-s", sol.to_str().unwrap(), "--out", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(svg).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let labels: Vec<&str> = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("point"))
        .filter_map(|g| g.descendants().find(|n| n.has_tag_name("text")).and_then(|t| t.text()))
        .collect();
    assert_eq!(labels, ["A", "B", "C", "D", "M", "N", "P", "Q"]);
}

#[test]
fn bench_reports_timings() {
    let out = fagnano(&["bench", "--count", "3", "--grid", "16"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("worst gap"));
}
