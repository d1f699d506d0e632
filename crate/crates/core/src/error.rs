use alloc::string::String;

/// Faults raised by the simulation kernel.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("vehicles overlap: space headway is {gap} m")]
    Overlap { gap: f64 },

    #[error("space headway must be positive for this law, got {gap} m")]
    NonPositiveGap { gap: f64 },

    #[error(
        "overlap fault (seed {seed}, step {step}): vehicle {follower} is {gap} m into vehicle {leader}"
    )]
    OverlapFault {
        seed: u64,
        step: u64,
        leader: u64,
        follower: u64,
        gap: f64,
    },

    #[error(
        "vehicle conservation violated at step {step}: injected {injected} != active {active} + exited {exited}"
    )]
    Conservation {
        step: u64,
        injected: u64,
        active: u64,
        exited: u64,
    },

    #[error("unknown route id {0} (expected 1..=6)")]
    UnknownRoute(u8),

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("replication {index} failed: {source}")]
    Replication {
        index: u32,
        #[source]
        source: alloc::boxed::Box<SimError>,
    },

    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// A scenario or parameter set that violates one of its invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("{0}")]
    Invariant(String),

    #[error("unknown infrastructure variant `{0}` (expected ID0, ID1, ID2 or ID3)")]
    UnknownVariant(String),
}

impl ConfigError {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        ConfigError::Invariant(msg.into())
    }
}
