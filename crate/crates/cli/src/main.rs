//! `godeaux-cert`: runs the check suites and prints a verification report.
//!
//! Exit status is 0 when every check passes (undecidable entries allowed),
//! 1 when any check fails, 2 on a usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::Parser;
use godeaux_core::{run_command, Command, SuiteConfig};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "godeaux-cert", version, about = "Exact checks for quintic-quotient Godeaux surfaces")]
struct Cli {
    /// Which suite to run.
    #[arg(value_parser = PossibleValuesParser::new(Command::NAMES).map(|s| s.parse::<Command>().expect("listed name")))]
    command: Command,

    /// Write the JSON report to this path.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Comma-separated primes, each 1 mod 5.
    #[arg(long, value_delimiter = ',', value_name = "CSV")]
    primes: Option<Vec<u64>>,

    /// Twelve comma-separated integer coefficients of the quintic.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, value_name = "CSV12")]
    coeffs: Option<Vec<i64>>,

    #[arg(long)]
    trials: Option<usize>,

    #[arg(long)]
    seed: Option<u64>,

    /// Omit the timestamp so reports are byte-reproducible.
    #[arg(long)]
    no_timestamp: bool,

    /// JSON config with keys primes, coefficients, pdo_budget {T, d_bound},
    /// trials, seed. Flags override it.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read config {path}: {source}")]
    ConfigRead { path: PathBuf, source: std::io::Error },
    #[error("malformed config {path}: {source}")]
    ConfigParse { path: PathBuf, source: serde_json::Error },
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("cannot write report to {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

impl Cli {
    fn resolve(&self) -> Result<SuiteConfig, CliError> {
        let mut config = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|source| CliError::ConfigRead { path: path.clone(), source })?;
                serde_json::from_str(&text).map_err(|source| CliError::ConfigParse { path: path.clone(), source })?
            }
            None => SuiteConfig::default(),
        };
        if let Some(p) = &self.primes {
            config.primes = p.clone();
        }
        if let Some(c) = &self.coeffs {
            config.coefficients = c.clone();
        }
        if let Some(t) = self.trials {
            config.trials = t;
        }
        if let Some(s) = self.seed {
            config.seed = s;
        }
        config.validate().map_err(CliError::Invalid)?;
        Ok(config)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let timestamp = (!cli.no_timestamp)
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    let report = run_command(cli.command, &config, timestamp);
    print!("{}", report.render_text());
    if let Some(path) = &cli.json {
        if let Err(source) = std::fs::write(path, report.to_json() + "\n") {
            eprintln!("error: {}", CliError::Write { path: path.clone(), source });
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
