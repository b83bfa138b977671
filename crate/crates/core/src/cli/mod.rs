//! Command-line front end.

mod analyze;
mod commands;
mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::build::{InitAccounting, LayoutStrategy};
use crate::circuit::GateKind;

pub use output::write_atomic;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "REVFT_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) | CliError::Runtime(_) => 1,
        }
    }
}

impl From<crate::error::AnalysisError> for CliError {
    fn from(e: crate::error::AnalysisError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<crate::error::BuildError> for CliError {
    fn from(e: crate::error::BuildError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<crate::error::SimError> for CliError {
    fn from(e: crate::error::SimError) -> Self {
        match e {
            crate::error::SimError::Csv(_) => CliError::Runtime(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "revft", version, about = "Fault-tolerant reversible circuits: build, simulate, analyse")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the exhaustive checks on a recovery circuit
    Verify(VerifyArgs),
    /// Compile one logical gate into a concatenated cycle
    Compile(CompileArgs),
    /// Estimate the logical error rate of one cycle at a single g
    Simulate(SimulateArgs),
    /// Estimate the logical error rate over a list of g values
    Sweep(SweepArgs),
    /// Closed-form calculators
    #[command(subcommand)]
    Analyze(analyze::AnalyzeCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "nonlocal", value_parser = parse_layout)]
    pub layout: LayoutStrategy,
    /// Check this circuit file as a recovery circuit instead of a built-in one
    #[arg(long)]
    pub circuit: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    #[arg(long, default_value = "nonlocal", value_parser = parse_layout)]
    pub layout: LayoutStrategy,
    #[arg(long, default_value_t = 1)]
    pub level: u32,
    /// Logical gate to compile (three-bit kinds only)
    #[arg(long, default_value = "TOFFOLI", value_parser = parse_kind)]
    pub gate: GateKind,
    #[arg(long, default_value = "counted", value_parser = parse_init)]
    pub init: InitAccounting,
    /// Circuit JSON destination; metadata goes to `<out>.meta.json`
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimArgs {
    #[arg(long, default_value = "nonlocal", value_parser = parse_layout)]
    pub layout: LayoutStrategy,
    #[arg(long, default_value_t = 1)]
    pub level: u32,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value = "counted", value_parser = parse_init)]
    pub init: InitAccounting,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: SimArgs,
    #[arg(long)]
    pub g: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub common: SimArgs,
    /// Comma-separated ascending g values
    #[arg(long = "g-list", value_delimiter = ',', required = true)]
    pub g_list: Vec<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

fn parse_layout(s: &str) -> Result<LayoutStrategy, String> {
    s.parse().map_err(|e: crate::error::BuildError| e.to_string())
}

fn parse_init(s: &str) -> Result<InitAccounting, String> {
    s.parse().map_err(|e: crate::error::BuildError| e.to_string())
}

fn parse_kind(s: &str) -> Result<GateKind, String> {
    s.to_ascii_uppercase()
        .parse()
        .map_err(|e: crate::error::CircuitError| e.to_string())
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
    // a pool may already exist when running inside a test harness; keep it
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Compile(a) => commands::compile(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Analyze(a) => analyze::run(a),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("revft: {e}");
            e.exit_code()
        }
    }
}
