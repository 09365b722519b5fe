use std::path::PathBuf;
use std::process::{Command, Output};

use gldist_cli::{parse_gaussian, run, JobSpec, Mode, Report, Subcommand};
use gldist::{GaussianRational, Rational};
use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn gldist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gldist")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let mut all = args.to_vec();
    all.push("--json");
    let out = gldist(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("report parses")
}

#[test]
fn sgn_cubed_fails_condition_ii() {
    let sgn3 = fixture("sgn3_g6.json");
    let r = report(&["classify", "--input", &sgn3, "--mode", "unitary"]);
    assert_eq!(r.results["distinguished"], json!(false));
    assert_eq!(r.results["condition_i"], json!(true));
    assert_eq!(r.results["condition_ii"], json!(false));
    assert_eq!(r.results["agreement"], json!(true));
    assert_eq!(r.results["block_verdict"]["distinguished"], json!(false));
    assert_eq!(r.results["has_exceptional_factor"], json!(true));
    assert_eq!(r.results["appears_in_branching"], json!(true));

    // The generic criterion looks at condition (i) only.
    let g = report(&["classify", "--input", &sgn3, "--mode", "generic"]);
    assert_eq!(g.results["distinguished"], json!(true));
    assert!(g.results.get("block_verdict").is_none());
}

#[test]
fn sgn_squared_is_distinguished() {
    let r = report(&["classify", "--input", &fixture("sgn2_g4.json")]);
    assert_eq!(r.results["distinguished"], json!(true));
    assert_eq!(r.results["verdict"]["witness"]["fixed"], json!([]));
}

#[test]
fn g4_distinguished_minimal_ktype() {
    let r = report(&["ktype", "--input", &fixture("g4_example.json"), "--radius", "8"]);
    assert_eq!(r.results["lowest_ktype"], json!([1, 1, 1, 1]));
    assert_eq!(r.results["distinguished_minimal_ktype"], json!([2, 2, 0, 0]));
    assert_eq!(r.results["oracle"]["agrees"], json!(true));
}

#[test]
fn batch_keeps_input_order() {
    let r = report(&["classify", "--input", &fixture("mixed_batch.json")]);
    let verdicts: Vec<Value> = r.results.as_array().unwrap().iter().map(|x| x["distinguished"].clone()).collect();
    assert_eq!(verdicts, vec![json!(true), json!(false), json!(true)]);
}

#[test]
fn derivative_test_certifies() {
    let r = report(&["derive", "--input", &fixture("monomial_k1.json")]);
    assert_eq!(r.results["condition_i"], json!(true));
    assert_eq!(r.results["outcome"]["failing_stage"], json!(2));
    assert_eq!(r.results["certifies_non_distinction"], json!(true));
}

#[test]
fn eps_is_one_for_distinguished_inputs() {
    for b in ["0,1", "0,2", "0,-3/2"] {
        let r = report(&["eps", "--input", &fixture("sgn2_g4.json"), "--b", b]);
        assert_eq!(r.results["is_one"], json!(true), "b = {b}");
    }
    let r = report(&["eps", "--input", &fixture("g4_example.json"), "--pair", &fixture("g4_example.json")]);
    assert_eq!(r.results["pair"]["is_one"], json!(true));
}

#[test]
fn cosets_two_two() {
    let r = report(&["cosets", "--n", "4", "--comp", "2,2"]);
    assert_eq!(r.results["involutions"], json!(10));
    let classes = r.results["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    assert_eq!(classes.iter().filter(|c| c["open"] == json!(true)).count(), 1);
    assert_eq!(r.results["representatives_verified"], json!(true));
}

#[test]
fn kernel_samples() {
    let r = report(&["verify-kernel", "--samples", "1/5,3/2"]);
    let rows = r.results.as_array().unwrap();
    assert!(rows[0]["case1"]["rel_err"].as_f64().unwrap() < 1e-6);
    assert!(rows[1]["case1"]["skipped"].is_string());
    assert!(rows[1]["case2"]["rel_err"].as_f64().unwrap() < 1e-6);
}

#[test]
fn selftest_passes() {
    let out = gldist(&["selftest"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(gldist(&["classify", "--input", "{\"type\": \"unitary\", "]).status.code(), Some(1));
    assert_eq!(gldist(&["classify", "--input", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(gldist(&["frobnicate"]).status.code(), Some(1));
    let bad_u = r#"{"type":"unitary","blocks":[{"kind":"char","n":2,"k":1,"u":{"re":"1","im":"0"}}]}"#;
    let out = gldist(&["classify", "--input", bad_u]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis violated"));
    let odd = r#"{"type":"langlands","characters":[{"m":1,"s":{"re":"0","im":"0"}}]}"#;
    assert_eq!(gldist(&["ktype", "--input", odd]).status.code(), Some(2));
    assert_eq!(gldist(&["cosets", "--n", "12"]).status.code(), Some(2));
    assert_eq!(gldist(&["verify-kernel", "--samples", "5"]).status.code(), Some(2));
}

#[test]
fn parse_errors_carry_positions() {
    let out = gldist(&["classify", "--input", "{\"type\": \"unitary\",\n \"blocks\": [}"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    let out = gldist(&["classify", "--input", r#"[{"type":"langlands","characters":[{"m":1}]}]"#]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("#0") && err.contains("characters[0]"), "{err}");
}

#[test]
fn reports_round_trip_and_replay() {
    let cases: Vec<Vec<String>> = vec![
        vec!["classify".into(), "--input".into(), fixture("mixed_batch.json")],
        vec!["classify".into(), "--input".into(), fixture("sgn3_g6.json"), "--mode".into(), "generic".into()],
        vec!["ktype".into(), "--input".into(), fixture("g4_example.json"), "--radius".into(), "6".into()],
        vec!["derive".into(), "--input".into(), fixture("monomial_k1.json")],
        vec!["eps".into(), "--input".into(), fixture("g4_example.json"), "--b".into(), "1/2,-1".into(), "--s0".into(), "1/3+i".into()],
        vec!["cosets".into(), "--n".into(), "3".into()],
        vec!["verify-kernel".into(), "--samples".into(), "1/5+3/10i".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = report(&args);
        let text = serde_json::to_string(&first).unwrap();
        let reparsed: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(reparsed, first, "{args:?}");
        assert_eq!(run(&first.inputs).unwrap(), first, "replay of {args:?}");
        let again = report(&args);
        assert_eq!(serde_json::to_string(&again).unwrap(), text, "{args:?} is not deterministic");
    }
}

#[test]
fn job_specs_deserialize() {
    let job: JobSpec = serde_json::from_value(json!({"subcommand": "verify-kernel", "samples": ["0"]})).unwrap();
    assert_eq!(job.subcommand, Subcommand::VerifyKernel);
    assert_eq!(job.mode, Mode::Unitary);
    let r = run(&job).unwrap();
    assert_eq!(r.results.as_array().unwrap().len(), 1);
}

#[test]
fn gaussian_literals() {
    let g = |re: (i64, i64), im: (i64, i64)| GaussianRational::new(Rational::frac(re.0, re.1), Rational::frac(im.0, im.1));
    assert_eq!(parse_gaussian("1/5+3/10i").unwrap(), g((1, 5), (3, 10)));
    assert_eq!(parse_gaussian("-1/2-i").unwrap(), g((-1, 2), (-1, 1)));
    assert_eq!(parse_gaussian("i").unwrap(), g((0, 1), (1, 1)));
    assert_eq!(parse_gaussian("-2i").unwrap(), g((0, 1), (-2, 1)));
    assert_eq!(parse_gaussian(" 3 ").unwrap(), g((3, 1), (0, 1)));
    assert!(parse_gaussian("1+").is_err());
    assert!(parse_gaussian("x").is_err());
}
