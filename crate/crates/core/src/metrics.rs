//! Per-vehicle zone metrics and their per-replication means.
//!
//! Travel time is zone entry to exit, delay is the time spent below the stop
//! speed inside the zone, and mean speed is the vehicle's own distance over
//! time in the zone (stops included). Speeds stay in m/s here.

use crate::error::SimError;
use crate::network::RouteId;
use crate::types::VehicleKind;

/// One vehicle's completed pass through the measurement zone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRecord {
    pub id: u64,
    pub class: VehicleKind,
    pub route: RouteId,
    /// Zone entry time, s.
    pub entry_time: f64,
    /// Zone exit time, s.
    pub exit_time: f64,
    pub stopped_time: f64,
    pub distance_in_zone: f64,
    pub time_in_zone: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VehicleMetrics {
    pub tau: f64,
    pub delta: f64,
    pub sigma: f64,
}

/// Stopped time inside the zone.
pub fn delay_time(record: &TrajectoryRecord) -> f64 {
    record.stopped_time
}

/// Stopped time from speed samples taken every `dt` seconds.
pub fn delay_from_samples(speeds: &[f64], dt: f64, stop_speed: f64) -> f64 {
    speeds.iter().filter(|v| **v < stop_speed).count() as f64 * dt
}

/// Space-mean speed over the vehicle's own zone traversal.
pub fn mean_speed(record: &TrajectoryRecord) -> Result<f64, SimError> {
    if !(record.time_in_zone > 0.0) {
        return Err(SimError::Precondition("mean speed needs a positive time in zone"));
    }
    Ok(record.distance_in_zone / record.time_in_zone)
}

pub fn vehicle_metrics(record: &TrajectoryRecord) -> Result<VehicleMetrics, SimError> {
    Ok(VehicleMetrics {
        tau: record.time_in_zone,
        delta: delay_time(record),
        sigma: mean_speed(record)?,
    })
}

/// Means over the vehicles of one replication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricMeans {
    pub tau: f64,
    pub delta: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aggregate {
    pub completed: usize,
    /// Vehicles still inside the zone when the run ended.
    pub censored: usize,
    /// `None` when no vehicle completed the zone in the window.
    pub means: Option<MetricMeans>,
}

impl Aggregate {
    pub fn is_empty(&self) -> bool {
        self.means.is_none()
    }
}

/// Arithmetic means of τ, Δ and Σ over `records`.
pub fn aggregate(records: &[TrajectoryRecord], censored: usize) -> Result<Aggregate, SimError> {
    let mut sum = MetricMeans { tau: 0.0, delta: 0.0, sigma: 0.0 };
    for r in records {
        let m = vehicle_metrics(r)?;
        sum.tau += m.tau;
        sum.delta += m.delta;
        sum.sigma += m.sigma;
    }
    let n = records.len();
    let means = (n > 0).then(|| {
        let k = n as f64;
        MetricMeans {
            tau: sum.tau / k,
            delta: sum.delta / k,
            sigma: sum.sigma / k,
        }
    });
    Ok(Aggregate { completed: n, censored, means })
}
