//! Check suites behind each command, and report assembly.

mod geometry;
mod lattice;
mod numerics;
mod operators;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::DEFAULT_PRIMES;
use crate::quintic::{QuinticCoefficients, NUM_MONOMIALS};
use crate::report::{Budget, CheckEntry, ReportFragment, ReportMetadata, VerificationReport};

pub use geometry::{diophantine_suite, monomials_suite, surface_suite};
pub use lattice::{counts_suite, lattice_suite};
pub use numerics::rr_suite;
pub use operators::pdo_suite;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    All,
    Monomials,
    Lattice,
    Surface,
    Counts,
    Rr,
    Pdo,
    Diophantine,
}

impl Command {
    pub const NAMES: [&'static str; 8] =
        ["all", "monomials", "lattice", "surface", "counts", "rr", "pdo", "diophantine"];

    pub fn name(&self) -> &'static str {
        match self {
            Command::All => "all",
            Command::Monomials => "monomials",
            Command::Lattice => "lattice",
            Command::Surface => "surface",
            Command::Counts => "counts",
            Command::Rr => "rr",
            Command::Pdo => "pdo",
            Command::Diophantine => "diophantine",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Command::All,
            "monomials" => Command::Monomials,
            "lattice" => Command::Lattice,
            "surface" => Command::Surface,
            "counts" => Command::Counts,
            "rr" => Command::Rr,
            "pdo" => Command::Pdo,
            "diophantine" => Command::Diophantine,
            other => return Err(format!("unknown command `{other}`")),
        })
    }
}

/// Inputs shared by all suites. Every field has a default.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub primes: Vec<u64>,
    pub coefficients: Vec<i64>,
    pub pdo_budget: Budget,
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            primes: DEFAULT_PRIMES.to_vec(),
            coefficients: QuinticCoefficients::fermat().values().to_vec(),
            pdo_budget: Budget::default(),
            trials: 500,
            seed: 42,
        }
    }
}

impl SuiteConfig {
    /// Usage-level validation: coefficient count, nonempty prime list,
    /// positive budget.
    pub fn validate(&self) -> Result<(), String> {
        if self.coefficients.len() != NUM_MONOMIALS {
            return Err(format!("expected {NUM_MONOMIALS} coefficients, got {}", self.coefficients.len()));
        }
        if self.primes.is_empty() {
            return Err("prime list is empty".into());
        }
        if self.pdo_budget.precision == 0 {
            return Err("pdo_budget.T must be positive".into());
        }
        Ok(())
    }
}

/// Runs the suites of one command, without metadata.
pub fn run_suites(command: Command, config: &SuiteConfig) -> ReportFragment {
    let mut out: Vec<CheckEntry> = Vec::new();
    let wants = |c: Command| command == Command::All || command == c;
    if wants(Command::Monomials) {
        out.extend(monomials_suite());
    }
    if wants(Command::Lattice) {
        out.extend(lattice_suite());
    }
    if wants(Command::Counts) {
        out.extend(counts_suite());
    }
    if wants(Command::Rr) {
        out.extend(rr_suite());
    }
    if wants(Command::Surface) {
        out.extend(surface_suite(config));
    }
    if wants(Command::Diophantine) {
        out.extend(diophantine_suite());
    }
    if wants(Command::Pdo) {
        out.extend(operators::pdo_suite(config));
    }
    out
}

/// Runs a command and assembles the report. `timestamp` is seconds since
/// the epoch, or `None` for reproducible output.
pub fn run_command(command: Command, config: &SuiteConfig, timestamp: Option<u64>) -> VerificationReport {
    let metadata = ReportMetadata {
        command: command.name().to_string(),
        primes: config.primes.clone(),
        coefficients: config.coefficients.clone(),
        seed: config.seed,
        trials: config.trials,
        pdo_budget: config.pdo_budget.clone(),
        tool_version: TOOL_VERSION.to_string(),
        timestamp,
    };
    VerificationReport::assemble(metadata, run_suites(command, config))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_round_trip() {
        for name in Command::NAMES {
            assert_eq!(name.parse::<Command>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Command>().is_err());
    }

    #[test]
    fn config_defaults_and_validation() {
        let c: SuiteConfig = serde_json::from_str(r#"{"seed": 7, "pdo_budget": {"T": 10, "d_bound": 4}}"#).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.pdo_budget.precision, 10);
        assert_eq!(c.primes, DEFAULT_PRIMES.to_vec());
        assert!(c.validate().is_ok());
        assert!(serde_json::from_str::<SuiteConfig>(r#"{"prime": [11]}"#).is_err());
        let bad = SuiteConfig { coefficients: vec![1, 2], ..SuiteConfig::default() };
        assert!(bad.validate().is_err());
    }
}
