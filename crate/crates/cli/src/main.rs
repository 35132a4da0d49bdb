//! `branchcover`: run verification suites, evaluate maps, solve fibers and
//! export point clouds.
//!
//! Exit codes: 0 success, 1 failed verification or degenerate fiber, 2 usage
//! or parse error.

mod point;
mod registry;
mod sample;

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use branchcover::maps::{EthFormula, ETH_SIGN_COUNT};
use branchcover::suites::{run_suite_with, SuiteOptions};
use branchcover::{SuiteId, Tolerance};
use clap::{Args, Parser, Subcommand};

use crate::sample::{CloudSpec, Format, Target};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input; exit 2.
    Usage(String),
    /// The input lies where the closed-form fiber breaks down; exit 1.
    Degenerate(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Degenerate(m) => write!(f, "degenerate fiber: {m}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "branchcover", version, about = "Explicit branched coverings of S^4: verification and evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Seed for all random draws.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Suite tolerance; strict checks use 1e-3 of it.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Tolerance of the Kuiper support-function comparison.
    #[arg(long, global = true)]
    hull_tol: Option<f64>,

    /// Samples per suite (defaults depend on the suite).
    #[arg(long, global = true)]
    samples: Option<u64>,

    /// Point-cloud format: csv or json.
    #[arg(long, global = true, default_value = "csv")]
    format: String,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and print one JSON report per line.
    Verify {
        /// Suite name, or "all" for every suite in registry order.
        #[arg(long, default_value = "all")]
        suite: String,

        /// Test fixture: flip one sign of the closed form of eth.
        #[arg(long, hide = true)]
        mutate_eth_sign: Option<usize>,
    },
    /// Evaluate a named map at a point.
    Eval {
        #[arg(long)]
        map: String,
        /// Point as JSON, e.g. {"space":"CP2","coords":[[1,0],[0,0],[0,0]]}.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Preimages of a point under f_hat, lambda, g, g_tilde or G.
    Fiber {
        #[arg(long)]
        map: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Export a point cloud.
    Sample {
        /// branch-set-G, branch-set-eth, c-level or map-graph.
        #[arg(long)]
        target: String,
        /// Level x of C_x for c-level.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        x: f64,
        /// Map for map-graph.
        #[arg(long)]
        map: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: u64,
    },
}

fn tolerance(g: &GlobalArgs) -> Result<Tolerance, CliError> {
    let d = Tolerance::default();
    Tolerance::new(d.eq_tol, g.tol.unwrap_or(d.suite_tol), g.hull_tol.unwrap_or(d.hull_tol))
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn emit(g: &GlobalArgs, text: &str) -> Result<(), CliError> {
    match &g.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
        }
    }
}

fn verify(g: &GlobalArgs, suite: &str, mutate: Option<usize>) -> Result<bool, CliError> {
    let tol = tolerance(g)?;
    let ids: Vec<SuiteId> = if suite == "all" {
        SuiteId::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|e: branchcover::Error| CliError::Usage(e.to_string()))?]
    };
    let mut opts = SuiteOptions::default();
    if let Some(k) = mutate {
        opts.eth = EthFormula::with_flipped(k).ok_or_else(|| {
            CliError::Usage(format!("--mutate-eth-sign must be below {ETH_SIGN_COUNT}"))
        })?;
    }
    let mut all_pass = true;
    let mut text = String::new();
    for id in ids {
        let samples = g.samples.unwrap_or_else(|| id.default_samples());
        let report = run_suite_with(id, samples, g.seed, &tol, &opts);
        eprintln!(
            "{:<11} {} max_error={:.3e} tolerance={:.1e} samples={}",
            report.suite,
            if report.pass { "PASS" } else { "FAIL" },
            report.max_error,
            report.tolerance,
            report.samples
        );
        all_pass &= report.pass;
        let line = serde_json::to_string(&report).expect("reports serialize");
        if g.output.is_none() {
            // stream each report as soon as its suite finishes
            emit(g, &format!("{line}\n"))?;
        } else {
            text.push_str(&line);
            text.push('\n');
        }
    }
    if g.output.is_some() {
        emit(g, &text)?;
    }
    Ok(all_pass)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { suite, mutate_eth_sign } => verify(g, suite, *mutate_eth_sign),
        Command::Eval { map, point } => {
            let p = point::parse_point(point)?;
            let y = registry::eval(map, &p, &tolerance(g)?)?;
            emit(g, &format!("{}\n", serde_json::to_string(&y.to_json()).expect("points serialize")))?;
            Ok(true)
        }
        Command::Fiber { map, point } => {
            let p = point::parse_point(point)?;
            let f = registry::fiber(map, &p, &tolerance(g)?)?;
            emit(g, &format!("{}\n", serde_json::to_string(&f).expect("fibers serialize")))?;
            Ok(true)
        }
        Command::Sample { target, x, map, count } => {
            let spec = CloudSpec {
                target: target.parse::<Target>()?,
                x: *x,
                map: map.clone(),
                count: *count,
                seed: g.seed,
                format: g.format.parse::<Format>()?,
            };
            emit(g, &sample::render(&spec, &tolerance(g)?)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Degenerate(msg)) => {
            let body = serde_json::json!({ "error": "DegenerateFiber", "message": msg });
            println!("{body}");
            eprintln!("error: degenerate fiber: {msg}");
            ExitCode::from(1)
        }
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
