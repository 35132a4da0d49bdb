use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_branchcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["verify", "--bogus-flag"],
        &["eval", "--map", "nope", "--point", r#"{"space":"S2","coords":[0,0,1]}"#],
        &["eval", "--map", "G", "--point", "not json"],
        &["eval", "--map", "G", "--point", r#"{"space":"S4","coords":[1,0,0,0,0]}"#],
        &["eval", "--map", "G", "--point", r#"{"space":"CP2","coords":[[0,0],[0,0],[0,0]]}"#],
        &["fiber", "--map", "eta", "--point", r#"{"space":"R6","coords":[1,0,0,0,0,0]}"#],
        &["sample", "--target", "c-level", "--x", "2"],
        &["sample", "--target", "c-level", "--count", "0"],
        &["sample", "--target", "map-graph"],
        &["sample", "--target", "c-level", "--format", "xml"],
        &["verify", "--suite", "group", "--tol", "-1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_suite_exits_1_with_a_report() {
    let out = run(&["verify", "--suite", "group", "--samples", "50", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let r: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(r["suite"], "group");
    assert_eq!(r["pass"], false);
}

#[test]
fn degenerate_fiber_exits_1_with_structured_error() {
    let out = run(&["fiber", "--map", "g_tilde", "--point", r#"{"space":"S4","coords":[1,0,0,0,0]}"#]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["error"], "DegenerateFiber");
}

#[test]
fn verify_all_prints_one_report_per_suite_in_order() {
    let out = run(&["verify", "--seed", "3"]);
    assert!(out.status.success());
    let suites: Vec<String> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        suites,
        ["group", "free-action", "diagram", "identities", "covering", "branch", "partition", "kuiper"]
    );
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["verify", "--suite", "covering", "--samples", "300", "--seed", "9"][..],
        &["sample", "--target", "branch-set-eth", "--count", "40", "--seed", "9"],
        &["sample", "--target", "map-graph", "--map", "eth", "--format", "json", "--count", "20"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn global_flags_work_after_the_subcommand_and_before_it() {
    let a = run(&["--seed", "4", "sample", "--target", "c-level", "--count", "5"]);
    let b = run(&["sample", "--target", "c-level", "--count", "5", "--seed", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["sample", "--target", "c-level", "--count", "5", "--seed", "5"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn output_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("branchcover-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cloud.csv");
    let path_s = path.to_str().unwrap();
    let out = run(&["sample", "--target", "branch-set-G", "--count", "7", "--output", path_s]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# space=S4 cols=x1,x2,x3,x4,x5"));
    assert_eq!(lines.count(), 7);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eval_output_parses_back_as_a_point() {
    let out = run(&["eval", "--map", "gamma", "--point", r#"{"space":"S2","coords":[1,0,0]}"#]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["space"], "CP1");
    // the output is accepted as input to the inverse map
    let back = run(&["eval", "--map", "gamma_inv", "--point", stdout(&out).trim()]);
    let w: Value = serde_json::from_str(stdout(&back).trim()).unwrap();
    let c: Vec<f64> = w["coords"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!((c[0] - 1.0).abs() < 1e-15 && c[1].abs() < 1e-15 && c[2].abs() < 1e-15);
}

#[test]
fn json_clouds_are_json_lines() {
    let out = run(&["sample", "--target", "map-graph", "--map", "G", "--format", "json", "--count", "3"]);
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    for l in lines {
        assert_eq!(l["input"]["space"], "CP2");
        assert_eq!(l["image"]["space"], "S4");
    }
}
