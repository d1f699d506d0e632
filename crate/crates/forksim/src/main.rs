use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use forksim::commands::{cmd_compare, cmd_report, cmd_run, cmd_sweep, cmd_validate, Overrides};
use forksim::CliError;

/// Roundabout fork traffic microsimulation: runs, scenario comparisons,
/// volume sweeps and validation against observed travel times.
#[derive(Parser)]
#[command(name = "forksim", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Common {
    /// Output directory, created if missing.
    #[arg(long)]
    out: PathBuf,
    /// Base seed, overrides the scenario file.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of replications, overrides the scenario file.
    #[arg(long)]
    reps: Option<u32>,
}

impl Common {
    fn overrides(&self) -> Overrides {
        Overrides {
            seed: self.seed,
            replications: self.reps,
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Run all replications of one scenario.
    Run {
        #[arg(long)]
        scenario: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compare scenarios by ANOVA and Duncan grouping of mean delay and speed.
    Compare {
        /// Repeat for every scenario (at least two).
        #[arg(long, required = true)]
        scenario: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Regress mean delay and speed on the volume increase.
    Sweep {
        #[arg(long)]
        scenario: PathBuf,
        /// Comma-separated volume multipliers, e.g. 1.0,1.1,1.5,2.0.
        #[arg(long, value_delimiter = ',', required = true)]
        mult: Vec<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Test observed against simulated mean travel time.
    Validate {
        #[arg(long)]
        scenario: PathBuf,
        /// CSV with a `tau_s` (or `tau`, `zone_s`) column and an optional `rep` column.
        #[arg(long)]
        observed: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Rebuild the summary of a finished run from its record files.
    Report {
        /// Run directory written by `run`.
        #[arg(long)]
        out: PathBuf,
    },
}

fn dispatch(verb: Verb) -> Result<String, CliError> {
    match verb {
        Verb::Run { scenario, common } => cmd_run(&scenario, &common.out, common.overrides()),
        Verb::Compare { scenario, common } => cmd_compare(&scenario, &common.out, common.overrides()).map(|o| o.text),
        Verb::Sweep { scenario, mult, common } => {
            cmd_sweep(&scenario, &mult, &common.out, common.overrides()).map(|o| o.text)
        }
        Verb::Validate {
            scenario,
            observed,
            common,
        } => cmd_validate(&scenario, &observed, &common.out, common.overrides()).map(|o| o.text),
        Verb::Report { out } => cmd_report(&out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.verb) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
