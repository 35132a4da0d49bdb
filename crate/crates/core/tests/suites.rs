use branchcover::report::Report;
use branchcover::suites::{run_suite_named, run_suite_with, SuiteOptions};
use branchcover::{run_suite, Error, SuiteId, Tolerance};

fn in_pool(threads: usize, f: impl FnOnce() -> Report + Send) -> Report {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let tol = Tolerance::default();
    for id in [SuiteId::Group, SuiteId::Covering, SuiteId::Kuiper] {
        let one = in_pool(1, || run_suite(id, 3_000, 5, &tol));
        let four = in_pool(4, || run_suite(id, 3_000, 5, &tol));
        assert_eq!(one, four, "{id}");
    }
}

#[test]
fn seeds_change_the_draws() {
    let tol = Tolerance::default();
    let a = run_suite(SuiteId::Identities, 500, 1, &tol);
    let b = run_suite(SuiteId::Identities, 500, 2, &tol);
    assert!(a.pass && b.pass);
    assert_ne!(a.max_error, b.max_error);
}

#[test]
fn unknown_suite_is_an_error() {
    let tol = Tolerance::default();
    assert!(matches!(run_suite_named("bogus", 10, 0, &tol), Err(Error::UnknownSuite(_))));
    assert!(run_suite_named("partition", 10, 0, &tol).unwrap().pass);
}

#[test]
fn printed_eth_fails_only_the_g_theta_identity() {
    let tol = Tolerance::default();
    let opts = SuiteOptions {
        eth: branchcover::maps::EthFormula::PRINTED,
    };
    let r = run_suite_with(SuiteId::Identities, 500, 7, &tol, &opts);
    assert!(!r.pass);
    let failing: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    assert_eq!(failing, ["ð = Gθ"]);
}

#[test]
fn zero_samples_give_a_vacuous_pass() {
    let r = run_suite(SuiteId::Kuiper, 0, 0, &Tolerance::default());
    assert!(r.pass);
    assert!(r.checks.iter().all(|c| c.evaluations == 0));
}

#[test]
fn report_serializes_with_the_documented_fields() {
    let r = run_suite(SuiteId::Group, 10, 7, &Tolerance::default());
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["suite", "samples", "seed", "max_error", "tolerance", "pass", "failures", "checks"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}
