//! Scenario files, CSV output, the parallel replication runner and the
//! `forksim` command-line verbs, on top of `forksim-core`.

pub mod commands;
pub mod error;
pub mod io;
pub mod runner;
pub mod scenario_file;

pub use error::CliError;
pub use scenario_file::{parse_scenario, parse_scenario_bytes, serialize_scenario, ScenarioFileError};
