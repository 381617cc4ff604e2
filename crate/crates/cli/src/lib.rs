//! Command-line driver for `effdom`.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 input too large for the
//! requested operation, 3 no efficient dominating set, 4 theorem violation,
//! 5 the two deciders disagree.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use effdom::harness::{
    evaluate, sample_graphs, search_counterexamples_with, verify_exhaustive, SampleSpec, SearchReport,
    Status, ViolationRecord,
};
use effdom::io::{read_graph, write_graph, GraphDocument};
use effdom::{class_report, eds_brute_force, eds_via_square, verify_eds, EdsOutcome, EdsResult, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_NO_EDS: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

/// Largest vertex count for labeled exhaustive runs; one more with `--dedup`.
const EXHAUSTIVE_LABELED_LIMIT: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "effdom", version, about = "Efficient domination via graph squares")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report membership in every catalog class.
    Check {
        /// graph6 line, edge-list file, or `-` for stdin
        graph: String,
    },
    /// Print the square of a graph in the input's format.
    Square { graph: String },
    /// Decide whether an efficient dominating set exists.
    Solve {
        graph: String,
        #[arg(long, value_enum, default_value_t = SolveMethod::Square)]
        method: SolveMethod,
    },
    /// Check the square-closure theorems on one graph, all small graphs, or a sample.
    Verify {
        #[arg(conflicts_with_all = ["exhaustive", "spec"], required_unless_present_any = ["exhaustive", "spec"])]
        graph: Option<String>,
        /// Every graph with at most this many vertices
        #[arg(long, value_name = "N", conflicts_with = "spec")]
        exhaustive: Option<usize>,
        /// One graph per isomorphism class (allows N = 8)
        #[arg(long, requires = "exhaustive")]
        dedup: bool,
        /// Sample spec, e.g. `n=8..40;p=0.3;seed=7;forbid=P6,banner`
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 1000, requires = "spec")]
        budget: u64,
    },
    /// Emit sampled graphs as graph6 lines.
    Sample {
        /// Vertex count `N` or range `A..B`
        #[arg(long)]
        n: String,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        /// Comma-separated patterns to repair away, e.g. `P6,banner`
        #[arg(long, default_value = "")]
        forbid: String,
        #[arg(long)]
        require_eds: bool,
        #[arg(long, default_value = "gnp")]
        model: String,
        #[arg(long)]
        count: usize,
    },
    /// Sample class members and tally theorem verdicts.
    Search {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        budget: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Square,
    Brute,
    Both,
}

/// Failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_capacity() { EXIT_CAPACITY } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Output<'a> = &'a mut (dyn Write + Send);

/// Runs one command line; returns the process exit code.
pub fn run<I, T>(args: I, out: Output<'_>, err: Output<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load_graph(arg: &str) -> Result<GraphDocument, Failure> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| usage(format!("reading stdin: {e}")))?;
        buf
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| usage(format!("reading {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(read_graph(&text)?)
}

fn io_failure(e: std::io::Error) -> Failure {
    usage(format!("write failed: {e}"))
}

fn parse_spec(text: &str) -> Result<SampleSpec, Failure> {
    let spec: SampleSpec = text.parse()?;
    if !text.split([';', '\n']).any(|item| item.trim_start().starts_with("seed")) {
        return Err(usage("sample spec needs an explicit seed=..."));
    }
    Ok(spec)
}

fn dispatch(command: Command, out: Output<'_>, err: Output<'_>) -> Result<i32, Failure> {
    match command {
        Command::Check { graph } => {
            let doc = load_graph(&graph)?;
            let report = class_report(&doc.graph);
            writeln!(out, "n={}\nedges={}\n{report}", doc.graph.n(), doc.graph.edge_count()).map_err(io_failure)?;
            writeln!(out, "SUMMARY P6-banner-free={}", report.p6_banner_free).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
        Command::Square { graph } => {
            let doc = load_graph(&graph)?;
            let text = write_graph(&doc.graph.square(), doc.format)?;
            write!(out, "{}", text).map_err(io_failure)?;
            if !text.ends_with('\n') {
                writeln!(out).map_err(io_failure)?;
            }
            Ok(EXIT_OK)
        }
        Command::Solve { graph, method } => solve(&load_graph(&graph)?, method, out),
        Command::Verify { graph, exhaustive, dedup, spec, budget } => {
            if let Some(graph) = graph {
                let doc = load_graph(&graph)?;
                let eval = evaluate(&doc.graph);
                let mut violations = 0;
                for v in &eval.verdicts {
                    writeln!(out, "{v}").map_err(io_failure)?;
                    violations += matches!(v.status, Status::Violation(_)) as u64;
                }
                let status = if violations == 0 { "ok" } else { "violation" };
                writeln!(out, "SUMMARY violations={violations} status={status}").map_err(io_failure)?;
                return Ok(if violations == 0 { EXIT_OK } else { EXIT_VIOLATION });
            }
            if let Some(n) = exhaustive {
                let limit = EXHAUSTIVE_LABELED_LIMIT + dedup as usize;
                if n > limit {
                    return Err(Error::Capacity { operation: "verify --exhaustive", n, limit }.into());
                }
                let err = Mutex::new(err);
                let report = verify_exhaustive(0, n, dedup, &|v| stream_violation(&err, v))?;
                return print_report(&report, out);
            }
            let spec = parse_spec(spec.as_deref().expect("clap requires a mode"))?;
            run_search(&spec, budget, out, err)
        }
        Command::Sample { n, p, seed, forbid, require_eds, model, count } => {
            let spec_text = format!("n={n};p={p};seed={seed};forbid={forbid};require_eds={require_eds};model={model}");
            let spec = parse_spec(&spec_text)?;
            let graphs = sample_graphs(&spec, count);
            for g in &graphs {
                writeln!(out, "{}", write_graph(g, effdom::io::GraphFormat::Graph6)?).map_err(io_failure)?;
            }
            if graphs.len() < count {
                writeln!(err, "warning: only {} of {count} samples accepted", graphs.len()).map_err(io_failure)?;
            }
            Ok(EXIT_OK)
        }
        Command::Search { spec, budget } => run_search(&parse_spec(&spec)?, budget, out, err),
    }
}

fn stream_violation(err: &Mutex<Output<'_>>, v: &ViolationRecord) {
    let mut err = err.lock().unwrap_or_else(|p| p.into_inner());
    let _ = writeln!(err, "VIOLATION {v}");
}

fn run_search(spec: &SampleSpec, budget: u64, out: Output<'_>, err: Output<'_>) -> Result<i32, Failure> {
    let err = Mutex::new(err);
    let report = search_counterexamples_with(spec, budget, &|v| stream_violation(&err, v));
    writeln!(out, "spec={spec}").map_err(io_failure)?;
    print_report(&report, out)
}

fn print_report(report: &SearchReport, out: Output<'_>) -> Result<i32, Failure> {
    writeln!(out, "{report}").map_err(io_failure)?;
    Ok(if report.total_violations() == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

fn describe(result: &EdsResult) -> String {
    match result.outcome {
        EdsOutcome::Exists(d) => format!("exists witness={d}"),
        EdsOutcome::NotExists => "none".to_string(),
    }
}

fn solve(doc: &GraphDocument, method: SolveMethod, out: Output<'_>) -> Result<i32, Failure> {
    let g = &doc.graph;
    let results = match method {
        SolveMethod::Square => vec![eds_via_square(g)],
        SolveMethod::Brute => vec![eds_brute_force(g)?],
        SolveMethod::Both => vec![eds_via_square(g), eds_brute_force(g)?],
    };
    for r in &results {
        writeln!(out, "{}={}", r.method, describe(r)).map_err(io_failure)?;
    }
    let certified = results.iter().all(|r| r.outcome.witness().is_none_or(|d| verify_eds(g, d)));
    let agree = results.windows(2).all(|w| w[0].outcome.exists() == w[1].outcome.exists());
    if results.len() > 1 {
        writeln!(out, "agree={agree}").map_err(io_failure)?;
    }
    if !(certified && agree) {
        writeln!(out, "SUMMARY outcome=mismatch").map_err(io_failure)?;
        return Ok(EXIT_MISMATCH);
    }
    let exists = results[0].outcome.exists();
    writeln!(out, "SUMMARY outcome={}", if exists { "exists" } else { "none" }).map_err(io_failure)?;
    Ok(if exists { EXIT_OK } else { EXIT_NO_EDS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("effdom").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spec_without_seed_is_rejected() {
        let (code, _, err) = run_args(&["search", "--spec", "n=8", "--budget", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("seed"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("solve"));
    }
}
