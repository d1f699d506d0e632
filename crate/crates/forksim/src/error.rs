use forksim_core::stats::StatsError;
use forksim_core::SimError;
use thiserror::Error;

use crate::io::IoError;
use crate::scenario_file::ScenarioFileError;

/// Failure of a command, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: unreadable or invalid files, bad flags. Exit code 2.
    #[error("{0}")]
    Input(String),
    /// The simulation or the analysis failed. Exit code 3.
    #[error("{0}")]
    Fault(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Fault(_) => 3,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn fault(msg: impl Into<String>) -> Self {
        CliError::Fault(msg.into())
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ScenarioFileError> for CliError {
    fn from(e: ScenarioFileError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::Config(c) => CliError::Input(c.to_string()),
            other => CliError::Fault(other.to_string()),
        }
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        CliError::Fault(e.to_string())
    }
}
