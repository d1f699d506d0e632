//! Rule-based lane changing.
//!
//! Mandatory (route) changes come first: when the current lane does not
//! connect to the next link of the route and the vehicle is within the
//! mandatory zone, it moves toward a connecting lane as soon as the gap test
//! passes. Otherwise a discretionary change is taken when an adjacent lane's
//! leader is faster by at least the speed-gain threshold. Both use the same
//! gap acceptance: lead gap `>= v * lead_headway`, lag gap
//! `>= v_lag * lag_headway + lag_buffer`.

use crate::error::SimError;
use crate::network::LaneRef;
use crate::types::VehicleAgent;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaneAction {
    Stay,
    /// Toward the median (lane index + 1).
    MoveLeft,
    /// Toward the curb (lane index - 1).
    MoveRight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaneChangeReason {
    RouteRequired,
    SpeedGain,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaneChangeDecision {
    pub action: LaneAction,
    pub reason: LaneChangeReason,
}

impl LaneChangeDecision {
    pub const STAY: LaneChangeDecision = LaneChangeDecision {
        action: LaneAction::Stay,
        reason: LaneChangeReason::None,
    };

    fn moving(action: LaneAction, reason: LaneChangeReason) -> Self {
        LaneChangeDecision { action, reason }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaneChangeParams {
    pub lead_headway: f64,
    pub lag_headway: f64,
    pub lag_buffer: f64,
    pub speed_gain: f64,
    /// Distance before the link end within which route changes are attempted.
    pub mandatory_zone: f64,
    /// No discretionary changes this close to the link end.
    pub discretionary_cutoff: f64,
}

impl Default for LaneChangeParams {
    fn default() -> Self {
        LaneChangeParams {
            lead_headway: 1.0,
            lag_headway: 1.0,
            lag_buffer: 2.0,
            speed_gain: 1.0,
            mandatory_zone: 150.0,
            discretionary_cutoff: 20.0,
        }
    }
}

impl LaneChangeParams {
    pub fn validate(&self) -> Result<(), crate::ConfigError> {
        let ok = [
            self.lead_headway,
            self.lag_headway,
            self.lag_buffer,
            self.speed_gain,
            self.mandatory_zone,
            self.discretionary_cutoff,
        ]
        .iter()
        .all(|p| *p >= 0.0 && p.is_finite());
        if ok {
            Ok(())
        } else {
            Err(crate::ConfigError::invariant(
                "lane-change parameters must be finite and >= 0",
            ))
        }
    }

    /// Gap acceptance on a target lane.
    pub fn accepts(&self, v: f64, lead: Option<NeighborGap>, lag: Option<NeighborGap>) -> bool {
        let lead_ok = lead.map_or(true, |l| l.gap >= 0.0 && l.gap >= v * self.lead_headway);
        let lag_ok = lag.map_or(true, |l| l.gap >= 0.0 && l.gap >= l.v * self.lag_headway + self.lag_buffer);
        lead_ok && lag_ok
    }
}

/// A neighbour on a lane: headway to it and its speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborGap {
    pub gap: f64,
    pub v: f64,
}

/// What the subject sees on one adjacent lane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjacentLane {
    pub leader: Option<NeighborGap>,
    pub lag: Option<NeighborGap>,
    /// Whether this lane connects to the next link of the route.
    pub connects: bool,
}

/// Inputs to the lane-change rule for one agent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaneChangeInput {
    pub v: f64,
    pub v_desired: f64,
    /// Speed of the current-lane leader, `None` when the lane ahead is clear.
    pub leader_v: Option<f64>,
    pub left: Option<AdjacentLane>,
    pub right: Option<AdjacentLane>,
    /// Whether the current lane connects to the next link of the route.
    pub current_connects: bool,
    pub distance_to_end: f64,
}

/// Decides whether to change lanes.
pub fn evaluate_lane_change(input: &LaneChangeInput, p: &LaneChangeParams) -> LaneChangeDecision {
    if !input.current_connects && input.distance_to_end <= p.mandatory_zone {
        for (side, action) in [(input.left, LaneAction::MoveLeft), (input.right, LaneAction::MoveRight)] {
            if let Some(adj) = side {
                if adj.connects && p.accepts(input.v, adj.leader, adj.lag) {
                    return LaneChangeDecision::moving(action, LaneChangeReason::RouteRequired);
                }
            }
        }
        return LaneChangeDecision::STAY;
    }

    let Some(current) = input.leader_v else {
        return LaneChangeDecision::STAY;
    };
    if current >= input.v_desired || input.distance_to_end <= p.discretionary_cutoff {
        return LaneChangeDecision::STAY;
    }
    let mut best: Option<(f64, LaneAction)> = None;
    for (side, action) in [(input.left, LaneAction::MoveLeft), (input.right, LaneAction::MoveRight)] {
        let Some(adj) = side else { continue };
        if !adj.connects && input.current_connects {
            continue;
        }
        let speed = adj.leader.map_or(input.v_desired, |l| l.v.min(input.v_desired));
        if speed - current >= p.speed_gain
            && p.accepts(input.v, adj.leader, adj.lag)
            && best.map_or(true, |(s, _)| speed > s)
        {
            best = Some((speed, action));
        }
    }
    match best {
        Some((_, action)) => LaneChangeDecision::moving(action, LaneChangeReason::SpeedGain),
        None => LaneChangeDecision::STAY,
    }
}

/// Target lane of a decision, if it exists on a link with `lane_count` lanes.
pub fn target_lane(lane: LaneRef, action: LaneAction, lane_count: u8) -> Option<LaneRef> {
    let idx = match action {
        LaneAction::Stay => return None,
        LaneAction::MoveLeft => lane.lane.checked_add(1)?,
        LaneAction::MoveRight => lane.lane.checked_sub(1)?,
    };
    (idx < lane_count).then_some(LaneRef::new(lane.link, idx))
}

/// Applies a decision to an agent, keeping its position.
///
/// `lead_gap` and `lag_gap` are the headways on the target lane at the
/// moment of execution; a negative one voids the change. Returns whether the
/// lane was changed.
pub fn execute_lane_change(
    agent: &mut VehicleAgent,
    decision: &LaneChangeDecision,
    lane_count: u8,
    lead_gap: Option<f64>,
    lag_gap: Option<f64>,
) -> Result<bool, SimError> {
    if decision.action == LaneAction::Stay {
        return Err(SimError::Precondition("cannot execute a Stay decision"));
    }
    let Some(target) = target_lane(agent.kinematics.lane, decision.action, lane_count) else {
        return Err(SimError::Precondition("target lane does not exist"));
    };
    if lead_gap.is_some_and(|g| g < 0.0) || lag_gap.is_some_and(|g| g < 0.0) {
        return Ok(false);
    }
    agent.kinematics.lane = target;
    Ok(true)
}
