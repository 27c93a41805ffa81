use std::process::Command;

use bernstein_cli::commands::{cmd_element, cmd_groebner, cmd_kurosh_demo, construct, kurosh_demo};
use bernstein_cli::{AlgebraFile, CliError, PresentationFile};
use bernstein_core::constructions::{catalog, example_not_train};
use ncgb::kurosh_presentation;

fn kv(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[test]
fn construct_round_trips_through_the_file_format() {
    let cases: Vec<(&str, Vec<(String, String)>)> = vec![
        ("elementary", kv(&[("dim", "4")])),
        ("constant", vec![]),
        ("nuclear", vec![]),
        ("three-dim-alpha", kv(&[("alpha", "5/2")])),
        ("example-not-train", vec![]),
        ("shift-up", kv(&[("n", "5")])),
        ("shift-down", kv(&[("n", "5")])),
        ("free-single", kv(&[("n", "5"), ("betas", "1, 0, -1/2")])),
        ("zhevlakov", kv(&[("vars", "3"), ("len", "3")])),
        ("poly-ring-assoc", kv(&[("n", "4")])),
    ];
    for (name, params) in cases {
        let t = construct(name, &params).unwrap();
        let text = AlgebraFile::from_table(&t).to_json();
        let back = AlgebraFile::parse(&text).unwrap().to_table().unwrap();
        assert_eq!(back, t, "{name}");
    }
    for t in catalog() {
        let back = AlgebraFile::from_table(&t).to_table().unwrap();
        assert_eq!(back, t);
    }
    assert!(matches!(construct("nope", &[]), Err(CliError::Input(_))));
    assert!(matches!(construct("shift-up", &kv(&[("m", "3")])), Err(CliError::Input(_))));
}

#[test]
fn malformed_files_name_the_problem() {
    let dup = r#"{"name":"d","basis":["e","e"],"products":[]}"#;
    let e = AlgebraFile::parse(dup).unwrap().to_table().unwrap_err();
    assert!(e.to_string().contains("'e' appears twice"));
    let bad = r#"{"name":"d","basis":["e"],"products":[{"left":"e","right":"e","value":{"e":"1/0"}}]}"#;
    let e = AlgebraFile::parse(bad).unwrap().to_table().unwrap_err();
    assert!(e.to_string().contains("product 1 (e*e), label 'e'"), "{e}");
    let unknown = r#"{"name":"d","basis":["e"],"products":[{"left":"e","right":"f","value":{}}]}"#;
    assert!(AlgebraFile::parse(unknown).unwrap().to_table().unwrap_err().to_string().contains("'f'"));
    let pair = r#"{"name":"d","basis":["e","u"],"products":[
        {"left":"e","right":"u","value":{"u":"1"}},{"left":"u","right":"e","value":{"u":"1"}}]}"#;
    assert!(AlgebraFile::parse(pair).unwrap().to_table().unwrap_err().to_string().contains("duplicates"));
    let syntax = AlgebraFile::parse("{\n\"name\": 3}").unwrap_err();
    assert!(syntax.to_string().contains("line 2"));
}

#[test]
fn element_report_on_the_example() {
    let r = cmd_element(&example_not_train(), "e+u+v").unwrap();
    assert_eq!(r.json["degree"], 3);
    assert!(r.text.contains("a^2 = e + 3 u"));
    assert!(r.text.contains("a^3 = e + 5 u"));
    assert_eq!(r.json["form_check"], true);
}

#[test]
fn presentation_file_round_trip_and_report() {
    let p = kurosh_presentation();
    let f = PresentationFile::from_presentation(&p);
    let text = serde_json::to_string(&f).unwrap();
    let back = PresentationFile::parse(&text).unwrap().to_presentation().unwrap();
    assert_eq!(back, p);
    let r = cmd_groebner(&back, 12, 2).unwrap();
    assert_eq!(r.json["added_elements"], 0);
    assert_eq!(r.json["complete_below"], 13);
    assert!(r.text.contains("relations are a Gröbner basis up to degree 12"));
    assert!(r.text.contains("normal words of degree 2: xx xy yx yy"));
}

#[test]
fn kurosh_demo_verdicts() {
    let r = cmd_kurosh_demo(12, 6, 0).unwrap();
    assert_eq!(r.passed, Some(true));
    let low = kurosh_demo(3, 6, 0).unwrap();
    assert!(low.iter().any(|s| !s.passed && s.detail.contains("completeness bound insufficient")));
    assert!(!low.iter().all(|s| s.passed));
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bernstein"))
}

#[test]
fn binary_exit_codes_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex.json");
    let st = bin().args(["construct", "example-not-train", "--out"]).arg(&path).output().unwrap().status;
    assert!(st.success());
    let out = bin().arg("element").arg(&path).arg("e + u + v").arg("--json").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let (_, json) = text.split_once("--- json ---\n").unwrap();
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    assert_eq!(v["degree"], 3);
    let out = bin().arg("train").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("train: false"));
    let out = bin().arg("element").arg(&path).arg("e + w").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().arg("check").arg(dir.path().join("missing.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(["kurosh-demo", "--max-deg", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}
