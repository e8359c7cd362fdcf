use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use q8deform::params::{search, DeformationParams, MAX_SEARCH_DEGREE};
use q8deform::report::{run, CheckId, RunOptions, VerificationReport};

/// Exact verification of a separable deformation of GF(2)Q8.
#[derive(Parser)]
#[command(name = "q8deform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification pipeline.
    Verify(VerifyArgs),
    /// Validate or search parameter tuples.
    #[command(subcommand)]
    Params(ParamsCommand),
    /// Render a report, from a saved JSON run or a fresh one.
    Report(ReportArgs),
}

#[derive(Subcommand)]
enum ParamsCommand {
    /// Print the validation report of a parameter tuple.
    Validate {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate valid tuples with polynomial w and d.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=MAX_SEARCH_DEGREE as i64))]
        degree_bound: u32,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
}

#[derive(Args)]
struct Source {
    /// A built-in parameter set.
    #[arg(long, value_enum, conflicts_with = "params_file")]
    preset: Option<Preset>,
    /// A key = value parameter file.
    #[arg(long)]
    params_file: Option<PathBuf>,
    /// Override the series precision used for coefficient extraction.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
    precision: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Report only this check (repeatable).
    #[arg(long = "check", value_parser = parse_check)]
    checks: Vec<CheckId>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include per-check wall-clock times.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct ReportArgs {
    /// A JSON report written by `verify --format json`.
    #[arg(long, conflicts_with_all = ["preset", "params_file"])]
    input: Option<PathBuf>,
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Example,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_check(s: &str) -> Result<CheckId, String> {
    s.parse().map_err(|e: q8deform::report::UnknownCheck| {
        let known: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
        format!("{e}; known checks: {}", known.join(", "))
    })
}

/// An input problem; exits with status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        Self(e.to_string())
    }
}

fn load(source: &Source) -> Result<DeformationParams, InputError> {
    let mut params = match (&source.preset, &source.params_file) {
        (_, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            DeformationParams::parse_file(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?
        }
        (Some(Preset::Example), None) | (None, None) => DeformationParams::example(),
    };
    if let Some(n) = source.precision {
        params.series_precision = n as usize;
    }
    Ok(params)
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), InputError> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict_code(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn execute(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Verify(args) => {
            let params = load(&args.source)?;
            let options = RunOptions {
                only: args.checks,
                timings: args.timings,
            };
            let report = run(&params, &options);
            emit(&render(&report, args.format), args.output.as_deref())?;
            Ok(verdict_code(report.passed()))
        }
        Command::Params(ParamsCommand::Validate { source, format }) => {
            let params = load(&source)?;
            let report = params.validate();
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => {
                    let mut out = String::new();
                    for c in &report.checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        out += &format!("{status:<5} {:<21} {}\n", c.name, c.detail);
                    }
                    out += &format!("verdict: {}\n", if report.passed() { "pass" } else { "fail" });
                    out
                }
            };
            emit(&text, None)?;
            Ok(verdict_code(report.passed()))
        }
        Command::Params(ParamsCommand::Search { degree_bound, limit }) => {
            let found = search(degree_bound, limit)?;
            let blocks: Vec<String> = found.iter().map(DeformationParams::to_file_string).collect();
            let text = blocks.join("\n");
            emit(&text, None)?;
            eprintln!("{} tuple(s) found", found.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Report(args) => {
            let report = match &args.input {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
                    serde_json::from_str::<VerificationReport>(&text)
                        .map_err(|e| InputError(format!("{}: {e}", path.display())))?
                }
                None => run(&load(&args.source)?, &RunOptions::default()),
            };
            emit(&render(&report, args.format), args.output.as_deref())?;
            Ok(verdict_code(report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
