//! Parallel replication runner.

use forksim_core::engine::{run_replication, ReplicationResult};
use forksim_core::scenario::Scenario;
use forksim_core::SimError;
use rayon::prelude::*;

/// Runs every replication of `scenario` on the rayon pool. Replications are
/// independent and merged by index, so the result equals the sequential
/// `run_experiment`.
pub fn run_parallel(scenario: &Scenario) -> Result<Vec<ReplicationResult>, SimError> {
    scenario.validate()?;
    let network = scenario.network()?;
    (0..scenario.replications)
        .into_par_iter()
        .map(|i| {
            run_replication(scenario, &network, i).map_err(|e| SimError::Replication {
                index: i,
                source: Box::new(e),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use forksim_core::engine::run_experiment;

    #[test]
    fn matches_sequential_run() {
        let s = Scenario {
            duration: 600.0,
            warmup: 60.0,
            replications: 6,
            seed: 31,
            ..Scenario::default()
        };
        assert_eq!(run_parallel(&s).unwrap(), run_experiment(&s).unwrap());
    }

    #[test]
    fn invalid_scenario_is_rejected_before_running() {
        let s = Scenario {
            replications: 0,
            ..Scenario::default()
        };
        assert!(matches!(run_parallel(&s), Err(SimError::Config(_))));
    }
}
