//! `singpoly`: compute, verify, cache and report.

mod cache;
mod poly;
mod tableaux;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use singpoly::build::cache::{PolyFamilyCache, CACHE_DIR_ENV};
use singpoly::verify::Budget;
use singpoly::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Exact Jack and Macdonald polynomials, singular specializations and special-point factorizations.
///
/// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 computation error (e.g. a pole at the
/// requested specialization).
#[derive(Debug, Parser)]
#[command(name = "singpoly", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Cache directory; defaults to $SINGPOLY_CACHE_DIR, and nothing is cached if neither is set.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest support-basis dimension a computation may use.
    #[arg(long, default_value_t = Budget::default().max_dim, global = true)]
    budget: usize,
    /// Print passing checks as well as failures.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and print a polynomial.
    Poly(poly::PolyArgs),
    /// Run a verification suite.
    Verify(verify::VerifyArgs),
    /// List tableaux of a shape.
    Tableaux(tableaux::TableauxArgs),
    /// Inspect or clear the cache.
    Cache(cache::CacheArgs),
}

/// Settings shared by every subcommand; printed as the run banner.
#[derive(Clone, Debug, Serialize)]
pub struct CliConfig {
    pub version: &'static str,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub budget: usize,
    pub verbosity: u8,
}

impl CliConfig {
    fn from_cli(cli: &Cli) -> Self {
        let cache_dir = cli.cache_dir.clone().or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from));
        CliConfig {
            version: env!("CARGO_PKG_VERSION"),
            format: cli.format,
            cache_dir,
            budget: cli.budget,
            verbosity: cli.verbose,
        }
    }

    pub fn budget(&self) -> Budget {
        Budget { max_dim: self.budget }
    }

    pub fn cache(&self) -> Result<Option<PolyFamilyCache>, Failure> {
        self.cache_dir.as_ref().map(PolyFamilyCache::open).transpose().map_err(Failure::from)
    }

    /// One-line description of the run, written to stderr in text mode.
    pub fn banner(&self) -> String {
        let cache = self.cache_dir.as_ref().map_or("none".to_string(), |d| d.display().to_string());
        format!("singpoly {} budget={} cache={}", self.version, self.budget, cache)
    }
}

/// Why a command did not succeed, mapped to an exit code.
#[derive(Debug)]
pub enum Failure {
    Checks,
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidShape(_) | Error::InvalidParams(_) | Error::ShapeMismatch(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Compute(e),
        }
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = CliConfig::from_cli(&cli);
    if config.format == Format::Text && config.verbosity > 0 {
        eprintln!("{}", config.banner());
    }
    let result = match &cli.command {
        Command::Poly(a) => poly::run(a, &config),
        Command::Verify(a) => verify::run(a, &config),
        Command::Tableaux(a) => tableaux::run(a, &config),
        Command::Cache(a) => cache::run(a, &config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
