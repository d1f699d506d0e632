//! Three-state car-following kernel.
//!
//! Each step an agent is classified as free, following or in emergency
//! deceleration, and the acceleration law of that state is evaluated:
//!
//! - free: bang-bang toward the desired speed (`a_max`, `0` or `a_normal`);
//! - following: asymmetric GHR stimulus-response,
//!   `a = r * v^s / dx^t * (v_lead - v)`, with `(r+, s+, t+)` while not faster
//!   than the leader and `(r-, s-, t-)` while faster, then `max(a, a_lead)`;
//! - emergency: `min(a_normal, a_lead - 0.5 (v - v_lead)^2 / dx)` when closing
//!   in, `min(a_normal, a_lead + 0.25 a_normal)` otherwise.
//!
//! All functions are pure.

use crate::error::SimError;
use crate::types::{LeaderContext, VehicleClass};

/// Regime an agent is in for the current step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DrivingState {
    #[default]
    Free,
    Following,
    Emergency,
}

impl DrivingState {
    pub const fn name(self) -> &'static str {
        match self {
            DrivingState::Free => "free",
            DrivingState::Following => "following",
            DrivingState::Emergency => "emergency",
        }
    }
}

/// Parameters of the asymmetric GHR law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhrParams {
    pub r_plus: f64,
    pub s_plus: f64,
    pub t_plus: f64,
    pub r_minus: f64,
    pub s_minus: f64,
    pub t_minus: f64,
}

impl Default for GhrParams {
    fn default() -> Self {
        GhrParams {
            r_plus: 1.2,
            s_plus: 0.0,
            t_plus: 1.0,
            r_minus: 1.6,
            s_minus: 0.0,
            t_minus: 1.0,
        }
    }
}

impl GhrParams {
    pub fn validate(&self) -> Result<(), crate::ConfigError> {
        let all = [
            self.r_plus,
            self.s_plus,
            self.t_plus,
            self.r_minus,
            self.s_minus,
            self.t_minus,
        ];
        if all.iter().any(|p| !p.is_finite()) {
            return Err(crate::ConfigError::invariant("GHR parameters must be finite"));
        }
        if !(self.r_plus > 0.0 && self.r_minus > 0.0) {
            return Err(crate::ConfigError::invariant("GHR r+ and r- must be > 0"));
        }
        if !(self.t_plus >= 0.0 && self.t_minus >= 0.0) {
            return Err(crate::ConfigError::invariant("GHR t+ and t- must be >= 0"));
        }
        Ok(())
    }
}

/// Distance thresholds separating the three regimes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateThresholds {
    /// Multiplies the base following distance to get the following horizon.
    pub horizon_factor: f64,
    /// Lower bound of the base following distance, meters.
    pub min_follow_distance: f64,
    /// Leaders slower than this count as stationary obstacles rather than
    /// moving vehicles to follow.
    pub moving_speed: f64,
}

impl Default for StateThresholds {
    fn default() -> Self {
        StateThresholds {
            horizon_factor: 5.0,
            min_follow_distance: 10.0,
            moving_speed: 0.1,
        }
    }
}

impl StateThresholds {
    /// Headway beyond which a leader no longer constrains the follower.
    pub fn follow_horizon(&self, v: f64, reaction_time: f64, s_buffer: f64) -> f64 {
        (v * reaction_time + s_buffer).max(self.min_follow_distance) * self.horizon_factor
    }

    /// Headway below which the follower brakes in emergency mode: reaction
    /// distance plus the difference of normal-deceleration stopping distances,
    /// never less than the standstill buffer.
    pub fn emergency_distance(
        &self,
        v: f64,
        v_lead: f64,
        reaction_time: f64,
        a_normal: f64,
        s_buffer: f64,
    ) -> f64 {
        let b = 2.0 * a_normal.abs();
        (v * reaction_time + v * v / b - v_lead * v_lead / b).max(s_buffer)
    }

    pub fn validate(&self) -> Result<(), crate::ConfigError> {
        if !(self.horizon_factor >= 1.0 && self.horizon_factor.is_finite()) {
            return Err(crate::ConfigError::invariant("horizon factor must be >= 1"));
        }
        if !(self.min_follow_distance > 0.0 && self.min_follow_distance.is_finite()) {
            return Err(crate::ConfigError::invariant(
                "minimum following distance must be > 0",
            ));
        }
        if !(self.moving_speed >= 0.0 && self.moving_speed.is_finite()) {
            return Err(crate::ConfigError::invariant("moving speed must be >= 0"));
        }
        Ok(())
    }
}

/// Classifies the driving regime from the current speed and the leader, if any.
///
/// A leader that is farther than the following horizon, or that drives at
/// least as fast as the agent wants to while still outside the emergency
/// distance, leaves the agent free. So does a stationary leader outside the
/// emergency distance: the agent closes in until it has to brake.
#[allow(clippy::too_many_arguments)]
pub fn classify_state(
    v: f64,
    v_desired: f64,
    leader: Option<&LeaderContext>,
    reaction_time: f64,
    a_normal: f64,
    s_buffer: f64,
    thresholds: &StateThresholds,
) -> DrivingState {
    let Some(ctx) = leader else {
        return DrivingState::Free;
    };
    let d_emerg = thresholds.emergency_distance(v, ctx.leader_v, reaction_time, a_normal, s_buffer);
    if ctx.delta_x < d_emerg {
        return DrivingState::Emergency;
    }
    if ctx.delta_x > thresholds.follow_horizon(v, reaction_time, s_buffer) {
        return DrivingState::Free;
    }
    if ctx.leader_v >= v_desired && v <= ctx.leader_v {
        return DrivingState::Free;
    }
    if ctx.leader_v < thresholds.moving_speed {
        return DrivingState::Free;
    }
    DrivingState::Following
}

/// Free-driving acceleration toward the desired speed.
pub fn free_acceleration(v: f64, v_desired: f64, a_max: f64, a_normal: f64) -> f64 {
    if (v - v_desired).abs() <= 1e-9 {
        0.0
    } else if v < v_desired {
        a_max
    } else {
        a_normal
    }
}

/// Time needed to reach the desired speed under the free-driving law.
pub fn time_to_desired(v: f64, v_desired: f64, a_max: f64, a_normal: f64) -> f64 {
    if (v - v_desired).abs() <= 1e-9 {
        0.0
    } else if v < v_desired {
        (v_desired - v) / a_max
    } else {
        (v - v_desired) / a_normal.abs()
    }
}

/// Asymmetric GHR acceleration.
pub fn ghr_acceleration(v: f64, ctx: &LeaderContext, p: &GhrParams) -> Result<f64, SimError> {
    if !(ctx.delta_x > 0.0) {
        return Err(SimError::NonPositiveGap { gap: ctx.delta_x });
    }
    let (r, s, t) = if v <= ctx.leader_v {
        (p.r_plus, p.s_plus, p.t_plus)
    } else {
        (p.r_minus, p.s_minus, p.t_minus)
    };
    let stimulus = ctx.leader_v - v;
    if stimulus == 0.0 {
        return Ok(0.0);
    }
    Ok(r * libm::pow(v, s) / libm::pow(ctx.delta_x, t) * stimulus)
}

/// Emergency deceleration that prevents collision and re-opens the headway.
pub fn emergency_deceleration(v: f64, ctx: &LeaderContext, a_normal: f64) -> Result<f64, SimError> {
    if !(ctx.delta_x > 0.0) {
        return Err(SimError::Overlap { gap: ctx.delta_x });
    }
    let required = if v > ctx.leader_v {
        let closing = v - ctx.leader_v;
        ctx.leader_a - 0.5 * closing * closing / ctx.delta_x
    } else {
        ctx.leader_a + 0.25 * a_normal
    };
    Ok(a_normal.min(required))
}

/// Following-state composition: the larger of the agent's own GHR response
/// and the leader's (previous-step) acceleration, clamped to
/// `[a_emergency, a_max]`.
pub fn compose_acceleration(
    own_a: f64,
    leader_a: f64,
    state: DrivingState,
    class: &VehicleClass,
) -> Result<f64, SimError> {
    if state != DrivingState::Following {
        return Err(SimError::Precondition(
            "acceleration composition applies to the following state only",
        ));
    }
    Ok(own_a.max(leader_a).clamp(class.a_emergency, class.a_max))
}

/// Everything the kernel needs to know about one follower.
#[derive(Debug, Clone, Copy)]
pub struct FollowerView<'a> {
    pub v: f64,
    pub v_desired: f64,
    pub reaction_time: f64,
    pub class: &'a VehicleClass,
}

/// Classifies the regime and evaluates its law.
///
/// In the following state the result is additionally capped by the
/// free-driving acceleration so the follower never speeds past its own desired
/// speed. In the emergency state the raw emergency value is returned. A zero
/// headway while closing in returns `-v / dt`, a full stop within the step.
pub fn acceleration(
    me: &FollowerView<'_>,
    leader: Option<&LeaderContext>,
    ghr: &GhrParams,
    thresholds: &StateThresholds,
    dt: f64,
) -> Result<(DrivingState, f64), SimError> {
    let class = me.class;
    let state = classify_state(
        me.v,
        me.v_desired,
        leader,
        me.reaction_time,
        class.a_normal,
        class.standstill_buffer(),
        thresholds,
    );
    let free = free_acceleration(me.v, me.v_desired, class.a_max, class.a_normal);
    let a = match (state, leader) {
        (DrivingState::Free, _) | (_, None) => free,
        (DrivingState::Following, Some(ctx)) => {
            let own = ghr_acceleration(me.v, ctx, ghr)?;
            compose_acceleration(own, ctx.leader_a, state, class)?.min(free)
        }
        (DrivingState::Emergency, Some(ctx)) => {
            if ctx.delta_x < 0.0 {
                return Err(SimError::Overlap { gap: ctx.delta_x });
            }
            if ctx.delta_x == 0.0 {
                if me.v > 0.0 {
                    -me.v / dt
                } else {
                    class.a_normal
                }
            } else {
                emergency_deceleration(me.v, ctx, class.a_normal)?
            }
        }
    };
    Ok((state, a))
}
