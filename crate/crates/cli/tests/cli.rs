use std::fs;
use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use varobs_cli::parser::{parse_poly, parse_ratfunc};
use varobs_cli::run;
use varobs_core::algebra::{rat, Poly, RatFunc};
use varobs_core::planar::BivarPoly;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("varobs").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_example1() {
    let (code, out, _) = invoke(&["analyze", "--p", "x^3-y", "--q", "y*(x^2-x-1-y)", "--phi", "0", "--kmax", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: NotRationallyIntegrable{k=2}"), "{out}");
    assert!(out.contains("[case 2d]"));

    let (code, out, _) = invoke(&[
        "analyze", "--p", "x^3-y", "--q", "y*(x^2-c*x-b-a*y)", "--let", "a=3", "--let", "b=1", "--let", "c=-1", "--json", "-",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"]["status"], "inconclusive");
    assert_eq!(v["verdict"]["reason"], "all-orders-elementary");
    assert_eq!(v["orders"][0]["outcome"]["solution"], "(-6*x^2 + 2)/(x^3)");
    assert_eq!(v["options"]["lets"]["c"], "-1");
}

#[test]
fn risch_example3() {
    let (code, out, _) = invoke(&["risch", "--alpha", "(x+1)/x^2", "--beta", "(2*x+2)/x^4", "--order", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("result: rational solution (4*x + 2)/(x^2)"), "{out}");
    let (_, out, _) = invoke(&["risch", "--alpha", "(x+1)/x^2", "--beta", "(2*x+2)/x^4", "--json", "-"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let h = parse_ratfunc(v["outcome"]["solution"].as_str().unwrap()).unwrap();
    assert_eq!(h, RatFunc::new(Poly::from_ints(&[2, 4]), Poly::from_ints(&[0, 0, 1])));
}

#[test]
fn transform_line_field() {
    let (code, out, _) = invoke(&["transform", "--p", "z2", "--q", "z1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "P = x^2 - 1\nQ = x*y\n");
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["analyze", "--p", "x^3-y", "--q", "y*(x^2-x-1-w)"],
        vec!["analyze", "--p", "x^3-y", "--q", "2x"],
        vec!["analyze", "--p", "x^3-y", "--q", "y", "--phi", "1"],
        vec!["analyze", "--p", "0", "--q", "0"],
        vec!["analyze", "--p", "x", "--q", "y", "--kmax", "1"],
        vec!["analyze", "--p", "x", "--q", "y", "--h1", "sideways"],
        vec!["risch", "--alpha", "1/x", "--beta", "1", "--order", "1"],
        vec!["transform", "--p", "z2", "--q", "z1", "--vars", "z1"],
        vec!["frobnicate"],
        vec![],
    ] {
        let (code, _, err) = invoke(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = invoke(&["analyze", "--p", "x^3-y", "--q", "y + 1.5"]);
    assert!(err.contains("column 6"), "{err}");
}

#[test]
fn help_and_binary_exit_codes() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("analyze"));
    let bin = env!("CARGO_BIN_EXE_varobs");
    let ok = Command::new(bin).args(["transform", "--p", "z2", "--q", "z1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["analyze", "--p", "x", "--q", "q"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown identifier 'q'"));
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..3).map(|i| dir.path().join(format!("r{i}.json"))).collect();
    for p in &paths {
        let (code, _, _) = invoke(&[
            "analyze", "--p", "x^2-y", "--q", "y*(x+1)", "--kmax", "5", "--json", p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let first = fs::read(&paths[0]).unwrap();
    for p in &paths[1..] {
        assert_eq!(first, fs::read(p).unwrap());
    }
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["verdict"], serde_json::json!({"k_max": 5, "reason": "all-orders-elementary", "status": "inconclusive"}));
}

#[test]
fn batch_preserves_lines_and_order() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.jsonl");
    let output = dir.path().join("out.jsonl");
    let mut lines = Vec::new();
    for i in 0..24 {
        lines.push(match i % 4 {
            0 => format!(r#"{{"p":"x^3-y","q":"y*(x^2-c*x-b-a*y)","lets":{{"a":{i},"b":1,"c":"1/2"}}}}"#),
            1 => r#"{"p":"x^2-y","q":"y*(x+1)","kmax":4,"h1":"corrected"}"#.to_string(),
            2 => r#"{"p":"x^2-y","q":"y*(1+x/2)","phi":"0","kmax":3}"#.to_string(),
            _ => r#"{"p":"x^2-y","q":"oops("}"#.to_string(),
        });
    }
    lines.push("not json".into());
    fs::write(&input, lines.join("\n") + "\n").unwrap();
    let (code, _, _) = invoke(&["batch", "--input", input.to_str().unwrap(), "--output", output.to_str().unwrap()]);
    assert_eq!(code, 2, "malformed lines make the run an input error");
    let text = fs::read_to_string(&output).unwrap();
    let out: Vec<&str> = text.lines().collect();
    assert_eq!(out.len(), lines.len());
    for (i, l) in out.iter().enumerate() {
        let v: Value = serde_json::from_str(l).unwrap();
        match i % 4 {
            _ if i == 24 => assert_eq!(v["line"], 25),
            0 => {
                assert_eq!(v["options"]["lets"]["a"], i.to_string());
                assert_eq!(v["verdict"]["status"], "not-rationally-integrable");
            }
            1 => assert_eq!(v["h1"]["interpretation"], "corrected"),
            2 => assert_eq!(v["verdict"]["reason"], "h1-failed"),
            _ => {
                assert_eq!(v["line"], i + 1);
                assert!(v["error"].as_str().unwrap().contains("column"));
            }
        }
    }

    let good = dir.path().join("good.jsonl");
    fs::write(&good, lines[1].clone() + "\n" + &lines[2]).unwrap();
    let (code, out, _) = invoke(&["batch", "--input", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    let (code, _, _) = invoke(&["batch", "--input", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn fixture_round_trips() {
    for t in ["x^3 - y", "y*(x^2 - x - 1 - y)", "1/2*x + 3", "-x^2*y + 7/3", "(x - y)^3", "0", "-5/7"] {
        let p = parse_poly(t).unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{t}");
    }
    let f = parse_ratfunc("-(x^2 + 1)/(3*x^3 - x)").unwrap();
    assert_eq!(parse_ratfunc(&f.to_string()).unwrap(), f);
}

fn bivar() -> impl Strategy<Value = BivarPoly> {
    prop::collection::vec((0u32..=6, 0u32..=6, -50i64..=50, 1i64..=9), 0..10).prop_map(|ts| {
        BivarPoly::from_terms(ts.into_iter().map(|(i, j, n, d)| ((i, j), rat(n, d))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn emitted_polynomials_reparse(p in bivar()) {
        let text = p.to_string();
        prop_assert_eq!(parse_poly(&text).unwrap(), p);
    }
}
