//! Experiment configuration.

use crate::carfollow::{GhrParams, StateThresholds};
use crate::demand::{DemandTable, OBSERVED_ROUTE_COUNTS};
use crate::error::ConfigError;
use crate::lanechange::LaneChangeParams;
use crate::network::{build_br_network_with, InfraVariant, MeasurementZone, NetworkParams, RoadNetwork};
use crate::types::{ClassTable, DEFAULT_LEGAL_SPEED};

/// Behavioural and bookkeeping thresholds shared by all vehicles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub state: StateThresholds,
    pub lane_change: LaneChangeParams,
    /// Minimum time gap to a circulating vehicle for a roundabout entry, s.
    pub critical_gap: f64,
    /// Spatial margin added to the entering vehicle's length, m.
    pub entry_buffer: f64,
    /// Only the lane head within this distance of the yield line asks for
    /// entry, m.
    pub entry_decision_distance: f64,
    /// Speed below which a vehicle counts as stopped, m/s.
    pub stop_speed: f64,
    /// How far ahead leaders are searched across links, m.
    pub scan_horizon: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            state: StateThresholds::default(),
            lane_change: LaneChangeParams::default(),
            critical_gap: 3.0,
            entry_buffer: 2.0,
            entry_decision_distance: 15.0,
            stop_speed: 0.1,
            scan_horizon: 200.0,
        }
    }
}

impl Thresholds {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.state.validate()?;
        self.lane_change.validate()?;
        let non_negative = [
            ("critical gap", self.critical_gap),
            ("entry buffer", self.entry_buffer),
            ("entry decision distance", self.entry_decision_distance),
            ("stop speed", self.stop_speed),
        ];
        for (name, v) in non_negative {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(ConfigError::invariant(alloc::format!("{name} must be finite and >= 0")));
            }
        }
        if !(self.scan_horizon > 0.0 && self.scan_horizon.is_finite()) {
            return Err(ConfigError::invariant("scan horizon must be > 0"));
        }
        Ok(())
    }
}

/// One experiment: a network variant, a demand level and every behavioural
/// parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub variant: InfraVariant,
    pub volume_multiplier: f64,
    /// Simulated time per replication including warm-up, s.
    pub duration: f64,
    pub warmup: f64,
    pub dt: f64,
    pub seed: u64,
    pub replications: u32,
    pub classes: ClassTable,
    pub ghr: GhrParams,
    pub thresholds: Thresholds,
    /// Vehicles per `demand_horizon` for routes 1..=6 before scaling.
    pub route_counts: [f64; 6],
    pub demand_horizon: f64,
    pub legal_speed: f64,
    pub lane_width: f64,
    /// Length of the approach tails inside the measurement zone, m.
    pub zone_approach_tail: f64,
    /// Steps between full safety checks; 0 picks a build-dependent default.
    pub check_interval: u32,
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario {
            variant: InfraVariant::Id0,
            volume_multiplier: 1.0,
            duration: 3900.0,
            warmup: 300.0,
            dt: 0.1,
            seed: 1,
            replications: 10,
            classes: ClassTable::default(),
            ghr: GhrParams::default(),
            thresholds: Thresholds::default(),
            route_counts: OBSERVED_ROUTE_COUNTS,
            demand_horizon: 3600.0,
            legal_speed: DEFAULT_LEGAL_SPEED,
            lane_width: 3.0,
            zone_approach_tail: MeasurementZone::default().approach_tail,
            check_interval: 0,
        }
    }
}

impl Scenario {
    pub fn with_variant(variant: InfraVariant) -> Self {
        Scenario {
            variant,
            ..Scenario::default()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.volume_multiplier >= 0.0 && self.volume_multiplier.is_finite()) {
            return Err(ConfigError::invariant("volume multiplier must be >= 0"));
        }
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(ConfigError::invariant("time step must be > 0"));
        }
        if !(self.duration > 0.0 && self.duration.is_finite()) {
            return Err(ConfigError::invariant("duration must be > 0"));
        }
        if !(self.warmup >= 0.0 && self.warmup < self.duration) {
            return Err(ConfigError::invariant("warm-up must be >= 0 and shorter than the duration"));
        }
        if self.replications == 0 {
            return Err(ConfigError::invariant("replications must be >= 1"));
        }
        if !(self.legal_speed > 0.0 && self.legal_speed.is_finite()) {
            return Err(ConfigError::invariant("legal speed must be > 0"));
        }
        if !(self.lane_width > 0.0 && self.lane_width.is_finite()) {
            return Err(ConfigError::invariant("lane width must be > 0"));
        }
        if !(self.zone_approach_tail >= 0.0 && self.zone_approach_tail.is_finite()) {
            return Err(ConfigError::invariant("zone approach tail must be >= 0"));
        }
        self.classes.validate()?;
        self.ghr.validate()?;
        self.thresholds.validate()?;
        self.demand().validate()
    }

    /// Demand table with the class mix taken from the class table, before
    /// volume scaling.
    pub fn demand(&self) -> DemandTable {
        DemandTable {
            route_counts: self.route_counts,
            class_shares: self.classes.shares(),
            horizon: self.demand_horizon,
        }
    }

    pub fn network_params(&self) -> NetworkParams {
        NetworkParams {
            legal_speed: self.legal_speed,
            lane_width: self.lane_width,
            zone: MeasurementZone {
                approach_tail: self.zone_approach_tail,
            },
        }
    }

    pub fn network(&self) -> Result<RoadNetwork, ConfigError> {
        build_br_network_with(self.variant, &self.network_params())
    }

    /// Number of clock steps in one replication.
    pub fn steps(&self) -> u64 {
        libm::round(self.duration / self.dt) as u64
    }

    /// Effective safety-check interval in steps.
    pub fn effective_check_interval(&self) -> u32 {
        match self.check_interval {
            0 if cfg!(debug_assertions) => 1,
            0 => 100,
            n => n,
        }
    }
}
