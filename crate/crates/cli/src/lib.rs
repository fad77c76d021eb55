//! File formats and argument plumbing behind the `chaotic-prng` binary.

pub mod bitstream;
pub mod config_file;
pub mod pgm;
pub mod report;
pub mod scheme;
pub mod seed;
pub mod transcript;

use std::process::ExitCode;

use chaotic_prng::analysis::AnalysisError;
use chaotic_prng::battery::BatteryError;
use chaotic_prng::cipher::CipherError;
use chaotic_prng::generator::{ConfigError, GeneratorError};
use thiserror::Error;

/// Failure of a subcommand, classified by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or inputs; exit status 2.
    #[error("{0}")]
    Usage(String),
    /// The run itself failed, e.g. a dead seed or an IO error; exit status 3.
    #[error("{0}")]
    Runtime(String),
    /// A statistical criterion was not met; exit status 1.
    #[error("{0}")]
    Statistical(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Statistical(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 3,
        })
    }

    pub fn usage(msg: impl std::fmt::Display) -> Self {
        CliError::Usage(msg.to_string())
    }

    pub fn runtime(msg: impl std::fmt::Display) -> Self {
        CliError::Runtime(msg.to_string())
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::DegenerateSeed(_) => CliError::runtime(e),
            _ => CliError::usage(e),
        }
    }
}

impl From<GeneratorError> for CliError {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Config(c) => c.into(),
            GeneratorError::InvalidTranscript => CliError::usage(e),
            _ => CliError::runtime(e),
        }
    }
}

impl From<BatteryError> for CliError {
    fn from(e: BatteryError) -> Self {
        match e {
            BatteryError::Sequence { source, .. } => source.into(),
            BatteryError::TooShort { .. }
            | BatteryError::InvalidParameter { .. }
            | BatteryError::NoPValues
            | BatteryError::MasterSeedRequired => CliError::usage(e),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Generator(g) => g.into(),
            AnalysisError::BudgetExceeded { .. } | AnalysisError::VerificationFailed { .. } => {
                CliError::runtime(e)
            }
            _ => CliError::usage(e),
        }
    }
}

impl From<CipherError> for CliError {
    fn from(e: CipherError) -> Self {
        match e {
            CipherError::Generator(g) => g.into(),
            _ => CliError::usage(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::runtime(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::runtime(e)
    }
}
