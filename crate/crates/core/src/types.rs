//! Shared domain types: vehicle classes, kinematic state, leader context and
//! the simulated driver-vehicle agent.

use core::fmt;
use core::str::FromStr;

use crate::carfollow::DrivingState;
use crate::error::SimError;
use crate::network::{LaneRef, RouteId};

/// Legal speed used on every link unless configured otherwise (40 km/h).
pub const DEFAULT_LEGAL_SPEED: f64 = 40.0 / 3.6;

/// Standstill buffer added to the body length to get the effective length.
pub const DEFAULT_STANDSTILL_BUFFER: f64 = 1.0;

/// Vehicle types observed at the fork, in the order of the observed class table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VehicleKind {
    Motorcycle,
    Wheeler4x8,
    Wheeler4x6,
    Van,
    Jeepney,
    Car,
    Bus,
    Bicycle,
}

impl VehicleKind {
    pub const ALL: [VehicleKind; 8] = [
        VehicleKind::Motorcycle,
        VehicleKind::Wheeler4x8,
        VehicleKind::Wheeler4x6,
        VehicleKind::Van,
        VehicleKind::Jeepney,
        VehicleKind::Car,
        VehicleKind::Bus,
        VehicleKind::Bicycle,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    /// Short lowercase name used in CSV output and scenario files.
    pub const fn name(self) -> &'static str {
        match self {
            VehicleKind::Motorcycle => "motorcycle",
            VehicleKind::Wheeler4x8 => "wheeler4x8",
            VehicleKind::Wheeler4x6 => "wheeler4x6",
            VehicleKind::Van => "van",
            VehicleKind::Jeepney => "jeepney",
            VehicleKind::Car => "car",
            VehicleKind::Bus => "bus",
            VehicleKind::Bicycle => "bicycle",
        }
    }
}

impl fmt::Display for VehicleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VehicleKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VehicleKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or(())
    }
}

/// Physical and behavioral parameters of one vehicle type.
///
/// `a_normal` and `a_emergency` are stored as negative numbers. The normal
/// deceleration enters the car-following laws as-is (so `min` picks the
/// stronger braking); `a_emergency` is the floor of the post-composition clamp
/// in the following state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VehicleClass {
    pub kind: VehicleKind,
    /// Body length in meters.
    pub length: f64,
    /// Body width in meters.
    pub width: f64,
    /// Length plus standstill buffer, in meters.
    pub effective_length: f64,
    pub a_max: f64,
    pub a_normal: f64,
    pub a_emergency: f64,
    pub desired_speed_mean: f64,
    pub desired_speed_sd: f64,
    pub reaction_time: f64,
    /// Population share in `[0, 1]`.
    pub share: f64,
}

impl VehicleClass {
    /// Defaults for `kind`: observed mean dimensions and class shares, plus
    /// configurable dynamic parameters.
    pub fn default_for(kind: VehicleKind) -> Self {
        // (length, width, a_max, a_normal, a_emergency, v_desired mean, sd, share)
        let (length, width, a_max, a_normal, a_emergency, vd_mean, vd_sd, share) = match kind {
            VehicleKind::Motorcycle => (2.00, 1.5, 3.0, -3.5, -7.0, 11.0, 1.5, 0.3830),
            VehicleKind::Wheeler4x8 => (6.59, 1.5, 1.2, -2.0, -5.0, 9.0, 1.0, 0.0064),
            VehicleKind::Wheeler4x6 => (5.41, 1.5, 1.2, -2.0, -5.0, 9.5, 1.0, 0.0275),
            VehicleKind::Van => (5.50, 1.5, 2.0, -3.0, -7.0, 10.5, 1.2, 0.0588),
            VehicleKind::Jeepney => (4.00, 1.5, 2.0, -3.0, -7.0, 9.5, 1.2, 0.0960),
            VehicleKind::Car => (4.50, 1.5, 2.5, -3.0, -7.0, 11.0, 1.2, 0.3173),
            VehicleKind::Bus => (11.54, 2.5, 1.2, -2.0, -5.0, 9.0, 1.0, 0.0038),
            VehicleKind::Bicycle => (1.45, 0.5, 1.0, -1.5, -4.0, 4.5, 1.0, 0.1072),
        };
        VehicleClass {
            kind,
            length,
            width,
            effective_length: length + DEFAULT_STANDSTILL_BUFFER,
            a_max,
            a_normal,
            a_emergency,
            desired_speed_mean: vd_mean,
            desired_speed_sd: vd_sd,
            reaction_time: 1.0,
            share,
        }
    }

    /// Standstill buffer `s_n - L_n`.
    pub fn standstill_buffer(&self) -> f64 {
        self.effective_length - self.length
    }

    pub fn validate(&self) -> Result<(), crate::ConfigError> {
        use crate::ConfigError as E;
        let name = self.kind.name();
        let fail = |what: &str| Err(E::invariant(alloc::format!("{name}: {what}")));
        if !(self.length > 0.0 && self.length.is_finite()) {
            return fail("length must be > 0");
        }
        if !(self.width > 0.0 && self.width.is_finite()) {
            return fail("width must be > 0");
        }
        if !(self.effective_length >= self.length && self.effective_length.is_finite()) {
            return fail("effective length must be >= length");
        }
        if !(self.a_max > 0.0 && self.a_max.is_finite()) {
            return fail("a_max must be > 0");
        }
        if !(self.a_normal < 0.0 && self.a_normal.is_finite()) {
            return fail("a_normal must be < 0");
        }
        if !(self.a_emergency <= self.a_normal && self.a_emergency.is_finite()) {
            return fail("a_emergency must be <= a_normal");
        }
        if !(self.desired_speed_mean > 0.0 && self.desired_speed_mean.is_finite()) {
            return fail("desired speed mean must be > 0");
        }
        if !(self.desired_speed_sd >= 0.0 && self.desired_speed_sd.is_finite()) {
            return fail("desired speed sd must be >= 0");
        }
        if !(self.reaction_time > 0.0 && self.reaction_time.is_finite()) {
            return fail("reaction time must be > 0");
        }
        if !(0.0..=1.0).contains(&self.share) {
            return fail("share must be in [0, 1]");
        }
        Ok(())
    }
}

/// The full class table, indexed by [`VehicleKind::index`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassTable(pub [VehicleClass; 8]);

impl Default for ClassTable {
    fn default() -> Self {
        ClassTable(VehicleKind::ALL.map(VehicleClass::default_for))
    }
}

impl ClassTable {
    pub fn get(&self, kind: VehicleKind) -> &VehicleClass {
        &self.0[kind.index()]
    }

    pub fn get_mut(&mut self, kind: VehicleKind) -> &mut VehicleClass {
        &mut self.0[kind.index()]
    }

    pub fn shares(&self) -> [f64; 8] {
        self.0.map(|c| c.share)
    }

    pub fn iter(&self) -> impl Iterator<Item = &VehicleClass> {
        self.0.iter()
    }

    pub fn validate(&self) -> Result<(), crate::ConfigError> {
        for c in &self.0 {
            c.validate()?;
        }
        let total: f64 = self.0.iter().map(|c| c.share).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(crate::ConfigError::invariant(alloc::format!(
                "class shares must sum to 1, got {total}"
            )));
        }
        Ok(())
    }
}

/// Longitudinal state of a vehicle on its current lane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicState {
    /// Front-bumper position along the lane, increasing in travel direction.
    pub x: f64,
    pub lane: LaneRef,
    pub v: f64,
    pub a: f64,
}

/// What a follower sees of its leader.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeaderContext {
    /// Bumper-to-bumper space headway `x_lead - L_lead - x`.
    pub delta_x: f64,
    /// `v_lead - v`.
    pub delta_v: f64,
    pub leader_v: f64,
    pub leader_a: f64,
    pub leader_length: f64,
}

impl LeaderContext {
    pub fn new(delta_x: f64, follower_v: f64, leader_v: f64, leader_a: f64, leader_length: f64) -> Self {
        LeaderContext {
            delta_x,
            delta_v: leader_v - follower_v,
            leader_v,
            leader_a,
            leader_length,
        }
    }

    /// A stationary zero-length obstacle `distance` meters ahead (stop lines,
    /// blocked merges).
    pub fn stop_line(distance: f64, follower_v: f64) -> Self {
        LeaderContext::new(distance, follower_v, 0.0, 0.0, 0.0)
    }
}

/// Space headway between a leader and its follower on the same lane.
///
/// A negative headway means the two bodies overlap and is reported as
/// [`SimError::Overlap`].
pub fn effective_gap(x_lead: f64, lead_length: f64, x_follow: f64) -> Result<f64, SimError> {
    let gap = x_lead - lead_length - x_follow;
    if gap < 0.0 {
        Err(SimError::Overlap { gap })
    } else {
        Ok(gap)
    }
}

/// Per-vehicle accumulators used to build trajectory records.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Accumulators {
    /// Time spent below the stop threshold inside the measurement zone.
    pub stopped_time: f64,
    /// Distance covered inside the measurement zone.
    pub distance: f64,
    pub time_in_zone: f64,
    /// Simulation time at which the vehicle first entered the zone.
    pub zone_entry: Option<f64>,
    pub zone_exit: Option<f64>,
}

/// A simulated driver-vehicle unit.
#[derive(Debug, Clone, PartialEq)]
pub struct VehicleAgent {
    pub id: u64,
    pub class: VehicleClass,
    pub route: RouteId,
    /// Index of the current link within the route.
    pub route_pos: usize,
    pub kinematics: KinematicState,
    pub driving_state: DrivingState,
    pub v_desired: f64,
    pub reaction_time: f64,
    /// Time the vehicle entered the network.
    pub entry_time: f64,
    pub acc: Accumulators,
}

/// Simulation clock with a fixed step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimClock {
    pub t: f64,
    pub dt: f64,
    pub step: u64,
}

impl SimClock {
    pub fn new(dt: f64) -> Self {
        assert!(dt > 0.0 && dt.is_finite(), "time step must be positive");
        SimClock { t: 0.0, dt, step: 0 }
    }

    pub fn advance(&mut self) {
        self.step += 1;
        // Recompute from the step count so long runs do not drift.
        self.t = self.step as f64 * self.dt;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_direct_substitution() {
        assert_eq!(effective_gap(50.0, 4.0, 26.0).unwrap(), 20.0);
    }

    #[test]
    fn gap_touching_bumpers() {
        assert_eq!(effective_gap(10.0, 10.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn gap_overlap_is_a_fault() {
        assert_eq!(
            effective_gap(5.0, 4.0, 3.0),
            Err(SimError::Overlap { gap: -2.0 })
        );
    }

    #[test]
    fn default_dimensions_match_observed_table() {
        let t = ClassTable::default();
        let expect = [
            (VehicleKind::Motorcycle, 2.00, 1.5),
            (VehicleKind::Wheeler4x8, 6.59, 1.5),
            (VehicleKind::Wheeler4x6, 5.41, 1.5),
            (VehicleKind::Van, 5.50, 1.5),
            (VehicleKind::Jeepney, 4.00, 1.5),
            (VehicleKind::Car, 4.50, 1.5),
            (VehicleKind::Bus, 11.54, 2.5),
            (VehicleKind::Bicycle, 1.45, 0.5),
        ];
        for (kind, l, w) in expect {
            assert_eq!(t.get(kind).length, l);
            assert_eq!(t.get(kind).width, w);
        }
    }

    #[test]
    fn default_shares_match_observed_table() {
        let shares = ClassTable::default().shares();
        let table3 = [38.30, 0.64, 2.75, 5.88, 9.60, 31.73, 0.38, 10.72];
        for (s, pct) in shares.iter().zip(table3) {
            assert!((s - pct / 100.0).abs() < 5e-5);
        }
        ClassTable::default().validate().unwrap();
    }

    #[test]
    fn class_invariants_are_checked() {
        let mut c = VehicleClass::default_for(VehicleKind::Car);
        c.a_normal = 1.0;
        assert!(c.validate().is_err());
        let mut c = VehicleClass::default_for(VehicleKind::Car);
        c.effective_length = c.length - 0.5;
        assert!(c.validate().is_err());
        let mut t = ClassTable::default();
        t.get_mut(VehicleKind::Car).share += 0.01;
        assert!(t.validate().is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in VehicleKind::ALL {
            assert_eq!(k.name().parse::<VehicleKind>(), Ok(k));
        }
    }
}
