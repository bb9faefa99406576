mod eval;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use wrightlab::quadrature::QuadraturePolicy;
use wrightlab::series::SeriesPolicy;
use wrightlab::verify::{run_verification, GridConfig, OutputFormat, Report, RunOptions};

use eval::EvalError;

/// Exit codes.
const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_CONVERGENCE: u8 = 3;
const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "wrightlab", version)]
#[command(about = "Evaluate Wright-type special functions and verify Euler-type integral identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function: `wrightlab eval mittag_leffler lambda=1 z=1`.
    Eval {
        function: String,
        /// key=value arguments
        args: Vec<String>,
    },
    /// Compare every closed form with its quadrature oracle over a grid.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        format: Option<OutputFormat>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tolerance: Option<f64>,
        /// Case-name glob, replacing the config's case list.
        #[arg(long = "case")]
        case_pattern: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Convert a report between JSON and CSV.
    Report {
        path: PathBuf,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn series_policy() -> Result<SeriesPolicy> {
    Ok(SeriesPolicy::default().with_env_overrides()?)
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    }
}

fn cmd_eval(function: &str, args: &[String]) -> u8 {
    let series = match series_policy() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_USAGE;
        }
    };
    match eval::evaluate(function, args, &series, &QuadraturePolicy::default()) {
        Ok(v) => {
            println!("{v}");
            EXIT_OK
        }
        Err(EvalError::Usage(msg)) => {
            eprintln!("error: {msg}\n\n{}", eval::usage());
            EXIT_USAGE
        }
        Err(EvalError::Numeric(e)) => {
            eprintln!("error: {e}");
            if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_CONVERGENCE
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    config: Option<PathBuf>,
    format: Option<OutputFormat>,
    out: Option<PathBuf>,
    seed: Option<u64>,
    tolerance: Option<f64>,
    case_pattern: Option<String>,
    jobs: Option<usize>,
) -> Result<u8> {
    let grid = match &config {
        Some(path) => match GridConfig::from_path(path) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(EXIT_USAGE);
            }
        },
        None => GridConfig::default(),
    };
    let opts = RunOptions {
        tolerance,
        case_pattern,
        seed,
        jobs,
        series: series_policy()?,
        quadrature: QuadraturePolicy::default(),
    };
    let report = match run_verification(&grid, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_USAGE);
        }
    };
    let format = format.or(grid.format).unwrap_or_default();
    write_output(out.as_ref(), &render(&report, format))?;
    let summary = report.summary();
    eprintln!("{} records: {summary}", report.records.len());
    Ok(if summary.ok() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_report(path: PathBuf, format: OutputFormat, out: Option<PathBuf>) -> Result<u8> {
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Ok(EXIT_USAGE);
        }
    };
    let report = match Report::parse_any(&text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return Ok(EXIT_USAGE);
        }
    };
    write_output(out.as_ref(), &render(&report, format))?;
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.cmd {
        Command::Eval { function, args } => Ok(cmd_eval(&function, &args)),
        Command::Verify { config, format, out, seed, tolerance, case_pattern, jobs } => {
            cmd_verify(config, format, out, seed, tolerance, case_pattern, jobs)
        }
        Command::Report { path, format, out } => cmd_report(path, format, out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
