//! Command-line front end: tabulate disk quotients, check criterion
//! hypotheses, verify admissibility over the constraint region, scan seeded
//! random corpora for implication violations, and export the catalog.
//!
//! Output is machine-readable: `quotients` emits CSV (or key=value records
//! with `--format records`), every other command emits one key=value record
//! per line. Diagnostics go to stderr. Exit codes: 0 success/holds, 1
//! fails/violations found, 2 invalid input or evaluation error, 3
//! inconclusive. Repeated runs with the same flags are byte-identical.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "starlike", version, about = "Starlikeness criteria toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate (Q_ST, Q_CV, Q_SD) over a polar grid
    Quotients(QuotientsArgs),
    /// Check one criterion's hypothesis for one function on a disk grid
    Check(CheckArgs),
    /// Verify catalog entries over the admissibility constraint region
    Admissibility(AdmissibilityArgs),
    /// Scan a seeded random corpus for criterion-vs-oracle violations
    Scan(ScanArgs),
    /// Export the criterion catalog
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct FunctionArgs {
    /// Stock function: identity, koebe, half-plane, quad-0.4, quad-0.6,
    /// cubic-0.25
    #[arg(long = "fn", value_name = "NAME")]
    name: Option<String>,
    /// Taylor coefficients from index 0, comma separated, each "re" or
    /// "re+imi"
    #[arg(long, value_name = "LIST", conflicts_with = "name")]
    coeffs: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Records,
}

#[derive(Args)]
struct QuotientsArgs {
    #[command(flatten)]
    function: FunctionArgs,
    /// Sample a single radius instead of the geometric span
    #[arg(long)]
    r: Option<f64>,
    /// Innermost radius of the geometric span
    #[arg(long, default_value_t = 0.1)]
    r_min: f64,
    /// Outermost radius of the geometric span
    #[arg(long, default_value_t = 0.995)]
    r_max: f64,
    /// Number of geometrically spaced radii
    #[arg(long, default_value_t = 8)]
    radii: usize,
    /// Equally spaced angles per radius
    #[arg(long, default_value_t = 16)]
    angles: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

// Grid defaults mirror the stock verification grid.
#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    function: FunctionArgs,
    /// Criterion id, e.g. T2.1.i
    #[arg(long)]
    criterion: String,
    #[arg(long, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    beta: f64,
    /// Innermost grid radius
    #[arg(long, default_value_t = 0.05)]
    r_min: f64,
    /// Outermost grid radius
    #[arg(long, default_value_t = 0.995)]
    r_max: f64,
    /// Number of geometrically spaced radii
    #[arg(long, default_value_t = 64)]
    radii: usize,
    /// Equally spaced angles per radius
    #[arg(long, default_value_t = 256)]
    angles: usize,
    /// Margins within this band of zero are inconclusive
    #[arg(long, default_value_t = 1e-6)]
    margin_tol: f64,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AdmissibilityArgs {
    /// Criterion id, or "all" for the whole catalog
    #[arg(long, default_value = "all")]
    criterion: String,
    /// Pin alpha instead of sweeping its domain
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Pin beta instead of sweeping its domain
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Samples per swept parameter axis
    #[arg(long, default_value_t = 8)]
    sweep: usize,
    /// Truncation for unbounded domain directions
    #[arg(long, default_value_t = 4.0)]
    trunc: f64,
    /// Worst-margin tolerance; the extremal face attains equality
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Smallest |rho| sampled
    #[arg(long, default_value_t = 1e-3)]
    rho_min: f64,
    /// Largest |rho| sampled
    #[arg(long, default_value_t = 100.0)]
    rho_max: f64,
    /// Also report the supremum of Re psi over the extremal boundary face
    #[arg(long)]
    report_sup: bool,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Corpus size
    #[arg(long, default_value_t = 1000)]
    count: usize,
    /// Largest polynomial degree; each function draws its own from
    /// 2..=degree
    #[arg(long, default_value_t = 6)]
    degree: usize,
    /// Upper bound on |a_k| for k >= 2
    #[arg(long, default_value_t = 0.4)]
    coeff_bound: f64,
    /// Corpus seed
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Explicit alpha,beta pair, repeatable; replaces the stock sweep
    #[arg(long = "pair", value_name = "ALPHA,BETA", allow_hyphen_values = true)]
    pairs: Vec<String>,
    /// Criterion id, or "all" for the whole catalog
    #[arg(long, default_value = "all")]
    criterion: String,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Criterion id, or "all" for the whole catalog
    #[arg(long, default_value = "all")]
    criterion: String,
    /// Also export the documented parameter reductions
    #[arg(long)]
    reductions: bool,
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// STARLIKE_THREADS caps the rayon worker count; unset keeps the default.
fn configure_threads() -> Result<(), String> {
    match std::env::var("STARLIKE_THREADS") {
        Ok(value) => {
            let threads: usize = value
                .trim()
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| {
                    format!("STARLIKE_THREADS must be a positive integer, got '{value}'")
                })?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global()
                .map_err(|e| e.to_string())
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(format!("STARLIKE_THREADS: {e}")),
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    match &cli.command {
        Command::Quotients(args) => commands::quotients(args),
        Command::Check(args) => commands::check(args),
        Command::Admissibility(args) => commands::admissibility(args),
        Command::Scan(args) => commands::scan(args),
        Command::Catalog(args) => commands::catalog(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| run(&cli));
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
