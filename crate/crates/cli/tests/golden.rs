//! Pins the report of every command. Set `UPDATE_GOLDEN=1` to rewrite the
//! expected files after an intentional change.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccgraph")).args(args).current_dir(dir("fixtures")).output().expect("binary runs")
}

fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    let got = String::from_utf8(out.stdout).unwrap();
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(got, want, "{name} drifted");
    if name.ends_with(".json") {
        let v: serde_json::Value = serde_json::from_str(&got).unwrap();
        assert_eq!(v["schema"], 1);
    }
}

#[test]
fn validate() {
    golden("validate.json", &["validate", "annulus.ccg"]);
}

#[test]
fn connect() {
    golden("connect.json", &["connect", "annulus.ccg", "--from", "S", "--to", "T", "--fibration", "L"]);
}

#[test]
fn path_to_lf() {
    golden("path-to-lf.json", &["path-to-lf", "annulus.ccg"]);
}

#[test]
fn lf_to_path() {
    golden("lf-to-path.json", &["lf-to-path", "annulus.ccg"]);
}

#[test]
fn lf_to_diagram() {
    golden("lf-to-diagram.json", &["lf-to-diagram", "annulus.ccg", "--sides", "10"]);
}

#[test]
fn hurwitz() {
    golden("hurwitz.json", &["hurwitz", "annulus.ccg", "--index", "1", "--inverse"]);
}

#[test]
fn stabilize() {
    golden("stabilize.json", &["stabilize", "annulus.ccg", "--path", "P", "--arc", "A"]);
}

#[test]
fn normalize_l0() {
    golden("normalize-l0.json", &["normalize-l0", "annulus.ccg"]);
    golden("normalize-l0-sampled.json", &["normalize-l0", "annulus.ccg", "--n", "5", "--seed", "7"]);
}

#[test]
fn l_bound() {
    golden("l-bound.json", &["l-bound", "annulus.ccg", "--diagram", "D"]);
}

#[test]
fn invariants() {
    golden("invariants.json", &["invariants", "annulus.ccg"]);
}

#[test]
fn example() {
    golden("family1-2.ccg", &["example", "family1", "--n", "2"]);
    golden("family2-3.ccg", &["example", "family2", "--n", "3"]);
}

#[test]
fn render() {
    let tmp = tempfile::tempdir().unwrap();
    let target = tmp.path().join("out.svg");
    golden("render.json", &["render", "annulus.ccg", "--diagram", "D", "--svg", target.to_str().unwrap()]);
    for i in 0..3 {
        let body = std::fs::read_to_string(tmp.path().join(format!("out-{i}.svg"))).unwrap();
        assert!(body.starts_with("<svg ") && body.trim_end().ends_with("</svg>"));
        assert_balanced(&body);
    }
    let again = tempfile::tempdir().unwrap();
    run(&["render", "annulus.ccg", "--diagram", "D", "--svg", again.path().join("out.svg").to_str().unwrap()]);
    for i in 0..3 {
        let name = format!("out-{i}.svg");
        assert_eq!(std::fs::read(tmp.path().join(&name)).unwrap(), std::fs::read(again.path().join(&name)).unwrap());
    }
}

/// Every element closes, in order.
fn assert_balanced(xml: &str) {
    let mut stack = Vec::new();
    let mut rest = xml;
    while let Some(i) = rest.find('<') {
        let j = rest[i..].find('>').expect("unterminated tag") + i;
        let tag = &rest[i + 1..j];
        if let Some(name) = tag.strip_prefix('/') {
            assert_eq!(stack.pop(), Some(name.to_string()));
        } else if !tag.ends_with('/') {
            stack.push(tag.split_whitespace().next().unwrap().to_string());
        }
        rest = &rest[j + 1..];
    }
    assert!(stack.is_empty(), "unclosed {stack:?}");
}

#[test]
fn examples_round_trip_and_validate() {
    for (fam, n) in [("family1", "3"), ("family2", "4")] {
        let text = String::from_utf8(run(&["example", fam, "--n", n]).stdout).unwrap();
        let tmp = tempfile::tempdir().unwrap();
        let file = tmp.path().join("x.ccg");
        std::fs::write(&file, &text).unwrap();
        let out = run(&["validate", file.to_str().unwrap()]);
        assert!(out.status.success());
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let path = v["objects"].as_array().unwrap().iter().find(|o| o["kind"] == "path").unwrap();
        assert_eq!(path["valid"], true);
        // n pairs for family1, n - 1 extra endpoints for family2
        let want: u64 = 3;
        assert_eq!(path["n0"], want);
        let bound = run(&["l-bound", file.to_str().unwrap(), "--family", fam, "--n", n]);
        let b: serde_json::Value = serde_json::from_slice(&bound.stdout).unwrap();
        assert_eq!((b["lower"].as_u64(), b["upper"].as_u64()), (Some(want), Some(want)));
    }
}

#[test]
fn semantic_error_names_the_letter() {
    let out = run(&["validate", "bad_letter.ccg"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["error"]["line"], 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("a9"));
    let out = run(&["invariants", "bad_letter.ccg"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("a9"));
}

#[test]
fn syntax_error_has_line_and_column() {
    let out = run(&["validate", "unclosed.ccg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2:23"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["validate"]).status.code(), Some(2));
    assert_eq!(run(&["example", "family3", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["lf-to-diagram", "annulus.ccg", "--sides", "0x"]).status.code(), Some(2));
}

#[test]
fn failed_computation_exits_1() {
    // two twists need two side choices
    assert_eq!(run(&["lf-to-diagram", "annulus.ccg", "--sides", "0"]).status.code(), Some(1));
}
