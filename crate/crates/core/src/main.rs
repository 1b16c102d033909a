use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ttw_susy::cli::{run, Suite, SuiteConfig, Truncation};
use ttw_susy::model::ModelParams;
use ttw_susy::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "ttw-susy", version, about = "Numerical verification of the supersymmetric TTW realization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// JSON configuration file.
    #[arg(long, env = "TTW_SUSY_CONFIG")]
    config: Option<PathBuf>,
    /// Suite to run; repeatable (specfun, model, algebra, irreps, special-cases, all).
    #[arg(long = "suite", value_parser = parse_suite)]
    suites: Vec<Suite>,
    /// Parameter set `k=..,a=..,b=..[,omega=..]`; repeatable, replaces the configured sets.
    #[arg(long = "param", value_parser = parse_params)]
    params: Vec<ModelParams>,
    /// Truncation `N,n` (radial and angular maxima).
    #[arg(long, value_parser = parse_nmax)]
    nmax: Option<Truncation>,
    /// Report destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    seed: Option<u64>,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_params(s: &str) -> Result<ModelParams, String> {
    let mut p = ModelParams { k: f64::NAN, a: f64::NAN, b: f64::NAN, omega: 1.0 };
    for part in s.split(',') {
        let (key, val) = part.split_once('=').ok_or_else(|| format!("expected key=value, got '{part}'"))?;
        let v: f64 = val.trim().parse().map_err(|_| format!("'{val}' is not a number"))?;
        match key.trim() {
            "k" => p.k = v,
            "a" => p.a = v,
            "b" => p.b = v,
            "omega" | "w" => p.omega = v,
            other => return Err(format!("unknown parameter '{other}'")),
        }
    }
    p.validate().map_err(|e| e.to_string())?;
    Ok(p)
}

fn parse_nmax(s: &str) -> Result<Truncation, String> {
    let (a, b) = s.split_once(',').ok_or("expected N,n")?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("'{x}' is not a count"));
    Ok(Truncation { nmax_radial: parse(a)?, nmax_sector: parse(b)? })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut cfg = match &args.config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default(),
    };
    if !args.suites.is_empty() {
        cfg.suites = args.suites;
    }
    if !args.params.is_empty() {
        cfg.params = args.params;
    }
    if let Some(t) = args.nmax {
        cfg.truncation = t;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let report = run(&cfg)?;
    let body = match args.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match &args.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{} of {} checks failed", report.summary.failed, report.summary.total);
        Ok(ExitCode::FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => verify(args).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }),
    }
}
