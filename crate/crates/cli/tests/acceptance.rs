//! Acceptance suite. Runs each numbered criterion at its stated tolerance and
//! sample size, prints one PASS/FAIL line per criterion, then fails the test if
//! any criterion failed.
//!
//! Run with `cargo test -p branchcover-cli --test acceptance -- --nocapture`.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use branchcover::maps::{big_g, eth, f_hat, ETH_SIGN_COUNT};
use branchcover::report::Report;
use branchcover::{proj_eq, run_suite, Cp1Point, Cp2Point, SuiteId, Tolerance, C64};
use serde_json::Value;

const SEED: u64 = 7;

/// Map name, CP2 input as (re, im) pairs, hand-derived S4 image.
type WorkedValue = (&'static str, [[f64; 2]; 3], [f64; 5]);
type NamedCriterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

/// Every named check must exist, have run on at least one sample and stay within `limit`.
fn checks_within(report: &Report, names: &[&str], limit: f64) -> Outcome {
    let mut worst: f64 = 0.0;
    for name in names {
        let Some(c) = report.check(name) else {
            return Outcome::new(false, format!("missing check {name:?}"));
        };
        if c.evaluations == 0 || c.failures > 0 || c.max_error > limit {
            return Outcome::new(
                false,
                format!("{name}: max_error={:.3e} failures={} evaluations={}", c.max_error, c.failures, c.evaluations),
            );
        }
        worst = worst.max(c.max_error);
    }
    Outcome::new(true, format!("{} checks, max_error={worst:.3e} ≤ {limit:.0e}", names.len()))
}

fn timed(limit: Duration, run: impl FnOnce() -> Report) -> (Report, Duration, bool) {
    let start = Instant::now();
    let r = run();
    let took = start.elapsed();
    (r, took, took < limit)
}

fn with_time(mut o: Outcome, took: Duration, in_time: bool, limit: Duration) -> Outcome {
    o.detail = format!("{}, {:.2?} (< {:?})", o.detail, took, limit);
    o.pass &= in_time;
    o
}

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_branchcover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn complex_coords(v: &Value) -> Vec<C64> {
    v["coords"]
        .as_array()
        .unwrap()
        .iter()
        .map(|z| C64::new(z[0].as_f64().unwrap(), z[1].as_f64().unwrap()))
        .collect()
}

fn real_coords(v: &Value) -> Vec<f64> {
    v["coords"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn cp2(v: [[f64; 2]; 3]) -> Cp2Point {
    Cp2Point::new(v.map(|[re, im]| C64::new(re, im))).unwrap()
}

fn cp2_json(v: [[f64; 2]; 3]) -> String {
    serde_json::json!({ "space": "CP2", "coords": v }).to_string()
}

fn criterion_1(tol: &Tolerance) -> Outcome {
    let limit = Duration::from_secs(1);
    let (r, took, ok) = timed(limit, || run_suite(SuiteId::Group, 10_000, SEED, tol));
    let names = [
        "normal form relations",
        "σ⁴ = 1",
        "τ² = 1",
        "τστ = σ⁻¹",
        "words act as their normal forms",
        "σ⁴ = 1 in harmonic coordinates",
        "τ² = 1 in harmonic coordinates",
        "τστ = σ⁻¹ in harmonic coordinates",
    ];
    let o = checks_within(&r, &names, 1e-9);
    with_time(Outcome::new(o.pass && r.pass && r.samples == 10_000, o.detail), took, ok, limit)
}

fn criterion_2(tol: &Tolerance) -> Outcome {
    let limit = Duration::from_secs(5);
    let (r, took, ok) = timed(limit, || run_suite(SuiteId::Identities, 10_000, SEED, tol));
    let names = [
        "βfα = (w, z²)",
        "f̂(c₁×c₁) = c₂f̂",
        "λτ = λ",
        "λσ² = θ²c₂λ",
        "λσ² = θc₂θ⁻¹λ",
        "θ⁴ = id",
        "c₂θc₂ = θ⁻¹",
        "Gλ = g̃",
        "ð = Gθ",
        "ðc₂ = ð",
    ];
    let o = checks_within(&r, &names, 1e-9);
    with_time(Outcome::new(o.pass && r.pass, o.detail), took, ok, limit)
}

fn criterion_3(tol: &Tolerance) -> Outcome {
    let r = run_suite(SuiteId::Identities, 10_000, SEED, tol);
    checks_within(&r, &["|g̃ raw| = √(1+2tt′(rr′+ss′))"], 1e-12)
}

fn criterion_4(tol: &Tolerance) -> Outcome {
    let r = run_suite(SuiteId::Covering, 1_000, SEED, tol);
    let names = [
        "f̂ generic fiber has 2 classes",
        "f̂ forward error",
        "λ generic fiber has 2 classes",
        "λ forward error",
        "g̃ generic fiber has 4 pairs",
        "g̃ fiber is the ⟨σ²,τ⟩-orbit",
        "G generic fiber has 2 classes",
        "on-conic f̂ fiber is one class of multiplicity 2",
        "on-conic relative discriminant",
    ];
    let o = checks_within(&r, &names, 1e-9);
    Outcome::new(o.pass && r.pass, o.detail)
}

fn criterion_5(tol: &Tolerance) -> Outcome {
    let r = run_suite(SuiteId::Branch, 1_000, SEED, tol);
    let o = checks_within(
        &r,
        &[
            "real points are c₂-fixed",
            "ð identifies real points with their conjugates",
            "λ(Δ) lies on the conic",
            "f̂(Δ) lies on the conic",
        ],
        1e-12,
    );
    Outcome::new(o.pass && r.pass, o.detail)
}

fn criterion_6(tol: &Tolerance) -> Outcome {
    let r = run_suite(SuiteId::Diagram, 1_000, SEED, tol);
    let names: Vec<&str> = r
        .checks
        .iter()
        .map(|c| c.name.as_str())
        .filter(|n| n.starts_with("paths to ") || n.ends_with(" model is orbit-constant"))
        .collect();
    if names.len() != 18 {
        return Outcome::new(false, format!("expected 9 path and 9 orbit checks, found {}", names.len()));
    }
    let mut all = names.clone();
    all.push("edge structure");
    let o = checks_within(&r, &all, 1e-9);
    Outcome::new(o.pass && r.pass, o.detail)
}

fn criterion_7(tol: &Tolerance) -> Outcome {
    let r = run_suite(SuiteId::Partition, 10_000, SEED, tol);
    let o = checks_within(
        &r,
        &["pair_dot∘σ = −pair_dot", "S³ cover lands in C₀", "S³ cover identifies ±q"],
        1e-12,
    );
    Outcome::new(o.pass && r.pass, o.detail)
}

fn criterion_8(tol: &Tolerance) -> Outcome {
    let limit = Duration::from_secs(30);
    let (r, took, ok) = timed(limit, || run_suite(SuiteId::Kuiper, 100_000, SEED, tol));
    let exact = checks_within(
        &r,
        &["η(ζv) = η(v)", "η(v̄) = η(v)", "x₁+x₂+x₃ = 1 on S⁵", "η on Σ is the Veronese map"],
        1e-12,
    );
    let hull = checks_within(&r, &["support functions of η(S⁵) and η(Σ) agree"], 0.05);
    let o = Outcome::new(
        exact.pass && hull.pass && r.pass,
        format!("invariances: {}; support gap: {}", exact.detail, hull.detail),
    );
    with_time(o, took, ok, limit)
}

fn criterion_9() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;

    // G and eth: the binary's output, the hand value and the library forward map agree
    let cases: [WorkedValue; 3] = [
        ("G", [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]], [0.0, 0.0, 0.0, 0.0, 1.0]),
        ("G", [[1.0, 0.0], [2.0, 0.0], [1.0, 0.0]], [1.0, 0.0, 0.0, 0.0, 0.0]),
        ("eth", [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]], [0.0, 1.0, 0.0, 0.0, 0.0]),
    ];
    for (map, x, hand) in cases {
        let out = bin(&["eval", "--map", map, "--point", &cp2_json(x)]);
        let got = real_coords(&stdout_json(&out));
        let lib = if map == "G" { big_g(&cp2(x)) } else { eth(&cp2(x)) };
        let e_hand = max_abs_diff(&got, &hand);
        let e_lib = max_abs_diff(lib.coords(), &hand);
        let ok = out.status.success() && e_hand <= 1e-12 && e_lib <= 1e-12;
        pass &= ok;
        notes.push(format!("{map}{x:?} err={e_hand:.1e}"));
    }

    // f_hat fiber of [-1:0:1] is {[1:1], [1:-1]}
    let target = [[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0]];
    let out = bin(&["fiber", "--map", "f_hat", "--point", &cp2_json(target)]);
    let fib = stdout_json(&out);
    let classes = fib["classes"].as_array().cloned().unwrap_or_default();
    let a = Cp1Point::from_real([1.0, 1.0]).unwrap();
    let b = Cp1Point::from_real([1.0, -1.0]).unwrap();
    let mut fiber_ok = out.status.success() && classes.len() == 2;
    for class in &classes {
        // PAIR_CP1 coordinates are the two CP1 points back to back
        let c = complex_coords(&class["point"]);
        let pts = [Cp1Point::new([c[0], c[1]]).unwrap(), Cp1Point::new([c[2], c[3]]).unwrap()];
        let as_hand = (proj_eq(&pts[0], &a, 1e-12) && proj_eq(&pts[1], &b, 1e-12))
            || (proj_eq(&pts[0], &b, 1e-12) && proj_eq(&pts[1], &a, 1e-12));
        let forward = proj_eq(&f_hat(&pts[0], &pts[1]), &cp2(target), 1e-12);
        fiber_ok &= as_hand && forward;
    }
    pass &= fiber_ok;
    notes.push(format!("f_hat fiber classes={}", classes.len()));
    Outcome::new(pass, notes.join("; "))
}

fn criterion_10() -> Outcome {
    let all = bin(&["verify", "--suite", "all"]);
    let all_ok = all.status.code() == Some(0);
    let mut caught = 0;
    for k in 0..ETH_SIGN_COUNT {
        let out = bin(&["verify", "--suite", "identities", "--mutate-eth-sign", &k.to_string()]);
        if out.status.code() == Some(1) {
            caught += 1;
        }
    }
    Outcome::new(
        all_ok && caught == ETH_SIGN_COUNT,
        format!(
            "verify --suite all exit={:?}; {caught}/{ETH_SIGN_COUNT} sign mutations exit 1",
            all.status.code()
        ),
    )
}

#[test]
fn acceptance() {
    let tol = Tolerance::default();
    let criteria: Vec<NamedCriterion> = vec![
        ("group relations", Box::new(|| criterion_1(&tol))),
        ("identities", Box::new(|| criterion_2(&tol))),
        ("norm identity", Box::new(|| criterion_3(&tol))),
        ("covering degrees", Box::new(|| criterion_4(&tol))),
        ("branch loci", Box::new(|| criterion_5(&tol))),
        ("diagram", Box::new(|| criterion_6(&tol))),
        ("partition", Box::new(|| criterion_7(&tol))),
        ("kuiper", Box::new(|| criterion_8(&tol))),
        ("worked values", Box::new(criterion_9)),
        ("cli contract", Box::new(criterion_10)),
    ];
    let mut failed = Vec::new();
    println!();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} criterion {:>2} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
