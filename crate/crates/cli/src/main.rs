//! Command-line entry point.
//!
//! Exit codes: 0 = all checks passed (or the certifier verdict matched the
//! catalog tag), 2 = at least one violation or mismatch was recorded,
//! 1 = configuration or I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hhverify_core::{
    render_report, run_certify, run_example, run_suite, ConvexityStatus, Error, FunctionSelection,
    ReportFormat, RunSummary, SuiteConfig,
};

#[derive(Parser)]
#[command(
    name = "hhverify",
    about = "Randomized verification of Hermite-Hadamard type operator inequalities \
             on Hermitian matrices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run inequality suites on random matrix samples and write a report.
    Verify(VerifyArgs),
    /// Search for operator-convexity violations of one catalog function.
    CertifyConvex(CertifyArgs),
    /// Run the built-in worked example (identity and square) on both of its
    /// interval cases, dims 1..4.
    Example(ExampleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id (repeatable via commas) or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Comma-separated matrix dimensions.
    #[arg(long, default_value = "1,2,4,8")]
    dim: String,
    /// Random endpoint pairs per (suite, dim).
    #[arg(long, default_value_t = 250)]
    trials: usize,
    /// Unit probe vectors per pair.
    #[arg(long, default_value_t = 8)]
    probes: usize,
    /// Spectral interval "lo,hi"; default [0,1], or [-1,0] for
    /// asynchronous-oriented suites.
    #[arg(long)]
    interval: Option<String>,
    /// Function pair "f,g", or "sweep" for all eligible catalog pairs.
    #[arg(long, default_value = "sweep")]
    functions: String,
    /// Master seed for all random draws.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol_abs: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_rel: f64,
    /// Composite quadrature panels.
    #[arg(long, default_value_t = 8)]
    quad_panels: usize,
    /// Gauss-Legendre nodes per panel (2..=16).
    #[arg(long, default_value_t = 8)]
    quad_nodes: usize,
    /// Report file path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Report format.
    #[arg(long, default_value = "json")]
    format: String,
    /// Also run sign-sensitive suites on signed pairs (recorded, not part of
    /// the default pools).
    #[arg(long, default_value_t = false)]
    include_signed: bool,
}

#[derive(Args)]
struct CertifyArgs {
    /// Catalog function id (e.g. "square", "cube", "power:1.5").
    #[arg(long)]
    function: String,
    /// Spectral interval "lo,hi".
    #[arg(long)]
    interval: String,
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct ExampleArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Report file path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Report format.
    #[arg(long, default_value = "json")]
    format: String,
}

fn parse_interval(s: &str) -> Result<(f64, f64), Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::ConfigInvalid(format!(
            "expected interval as lo,hi — got {s:?}"
        )));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::ConfigInvalid(format!("bad interval endpoint {:?}", parts[0])))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::ConfigInvalid(format!("bad interval endpoint {:?}", parts[1])))?;
    Ok((lo, hi))
}

fn parse_format(s: &str) -> Result<ReportFormat, Error> {
    match s {
        "json" => Ok(ReportFormat::Json),
        "csv" => Ok(ReportFormat::Csv),
        other => Err(Error::ConfigInvalid(format!(
            "format must be json or csv, got {other:?}"
        ))),
    }
}

fn write_report(records_rendered: String, path: &Option<PathBuf>) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, records_rendered).map_err(Error::from),
        None => {
            println!("{records_rendered}");
            Ok(())
        }
    }
}

fn print_summary(summary: &RunSummary) {
    eprintln!(
        "checks: {} passed, {} violated, {} skipped ({} total) in {:.2}s",
        summary.passes,
        summary.violations,
        summary.skips,
        summary.total_checks,
        summary.wall_time_seconds
    );
    if let Some((margin, context)) = &summary.worst_margin {
        eprintln!("worst margin: {margin:+.3e} at {context}");
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Error> {
    let dims: Result<Vec<usize>, _> = args
        .dim
        .split(',')
        .map(|d| d.trim().parse::<usize>())
        .collect();
    let dims = dims.map_err(|_| Error::ConfigInvalid(format!("bad dim list {:?}", args.dim)))?;

    let functions = match args.functions.as_str() {
        "sweep" | "catalog-sweep" => FunctionSelection::Sweep,
        pair => {
            let parts: Vec<&str> = pair.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::ConfigInvalid(format!(
                    "expected --functions f,g or sweep — got {pair:?}"
                )));
            }
            FunctionSelection::Pair(parts[0].trim().to_string(), parts[1].trim().to_string())
        }
    };

    let config = SuiteConfig {
        suites: args
            .suite
            .split(',')
            .map(|s| s.trim().to_string())
            .collect(),
        dims,
        trials: args.trials,
        probes: args.probes,
        interval: args.interval.as_deref().map(parse_interval).transpose()?,
        functions,
        seed: args.seed,
        tol_abs: args.tol_abs,
        tol_rel: args.tol_rel,
        quad: hhverify_core::QuadratureSpec {
            panels: args.quad_panels,
            nodes_per_panel: args.quad_nodes,
        },
        include_signed: args.include_signed,
        threads: None,
        report_path: args.report.clone(),
        format: parse_format(&args.format)?,
    };

    let (summary, records) = run_suite(&config)?;
    write_report(render_report(&records, config.format), &config.report_path)?;
    print_summary(&summary);
    Ok(if summary.violations > 0 { 2 } else { 0 })
}

fn cmd_certify(args: &CertifyArgs) -> Result<u8, Error> {
    let interval = parse_interval(&args.interval)?;
    let outcome = run_certify(&args.function, interval, args.dim, args.trials, args.seed)?;
    match outcome.verdict.status {
        ConvexityStatus::NoViolationFound => {
            eprintln!(
                "{}: no operator-convexity violation in {} trials (tagged {:?})",
                outcome.function_id, outcome.verdict.trials_used, outcome.convexity_class
            );
        }
        ConvexityStatus::Violated => {
            let ce = outcome.verdict.counterexample.as_ref().expect("stored");
            eprintln!(
                "{}: VIOLATED at trial {} (lambda = {:.6}, gap min-eig = {:.6e}, \
                 seeds a={} b={})",
                outcome.function_id, ce.trial, ce.lambda, ce.min_eig_of_gap, ce.seed_a, ce.seed_b
            );
        }
    }
    Ok(if outcome.matches_catalog { 0 } else { 2 })
}

fn cmd_example(args: &ExampleArgs) -> Result<u8, Error> {
    let format = parse_format(&args.format)?;
    let (summary, records) = run_example(args.seed)?;
    write_report(render_report(&records, format), &args.report)?;
    print_summary(&summary);
    Ok(if summary.violations > 0 { 2 } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::CertifyConvex(args) => cmd_certify(args),
        Command::Example(args) => cmd_example(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
