//! Fixed-step synchronous simulation loop and replication runner.
//!
//! Each step first reads the state at `t` to decide every agent's regime,
//! acceleration, lane change and roundabout entry, then applies lane changes,
//! integrates with semi-implicit Euler, moves agents across link boundaries,
//! retires finished agents and injects due arrivals.

use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::carfollow::{acceleration, DrivingState, FollowerView};
use crate::demand::{arrival_schedule, scale_volume, Arrival};
use crate::error::SimError;
use crate::lanechange::{
    evaluate_lane_change, target_lane, AdjacentLane, LaneAction, LaneChangeDecision, LaneChangeInput,
    NeighborGap,
};
use crate::metrics::{aggregate, Aggregate, TrajectoryRecord};
use crate::network::{
    lag_of, leader_beyond, roundabout_entry_check, same_lane_leader, EntryDecision, LaneRef, LinkKind, Occupancy, OccupantView,
    RoadNetwork,
};
use crate::scenario::Scenario;
use crate::types::{Accumulators, KinematicState, LeaderContext, SimClock, VehicleAgent};

/// Tolerance for floating-point noise in the no-overlap check, m.
const GAP_TOLERANCE: f64 = 1e-9;

/// Golden-ratio increment of the seed mixer.
const SEED_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed of replication `rep_index`: one SplitMix64 output for
/// `seed ^ ((rep_index + 1) * SEED_GAMMA)`. Portable across platforms.
pub fn replication_seed(seed: u64, rep_index: u32) -> u64 {
    let mut z = seed ^ (rep_index as u64 + 1).wrapping_mul(SEED_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counters describing a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RunStats {
    pub steps: u64,
    pub injected: u64,
    pub exited: u64,
    pub active: u64,
    /// Arrivals still waiting for space at the network boundary.
    pub queued: u64,
    /// Agents that had to stop because their lane does not continue.
    pub blocked_merges: u64,
    /// Steps where the speed cap against the post-lane-change leader bound.
    pub guard_interventions: u64,
    pub lane_changes: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplicationResult {
    pub rep_index: u32,
    /// Derived seed of this replication's generator.
    pub seed: u64,
    pub records: Vec<TrajectoryRecord>,
    pub aggregate: Aggregate,
    pub stats: RunStats,
}

#[derive(Debug, Clone, Copy)]
struct Plan {
    state: DrivingState,
    a: f64,
    held: bool,
    /// Distance to the nearest obstacle at `t` (leader rear or stop line).
    clearance: Option<f64>,
    change: LaneChangeDecision,
}

/// The mutable state of one replication.
#[derive(Debug, Clone)]
pub struct WorldState {
    pub clock: SimClock,
    pub agents: Vec<VehicleAgent>,
    pub records: Vec<TrajectoryRecord>,
    pub stats: RunStats,
    seed: u64,
    schedule: Vec<Arrival>,
    cursor: usize,
    /// Due arrivals per entry link.
    queues: Vec<VecDeque<Arrival>>,
    next_id: u64,
    occ: Occupancy,
    held: Vec<bool>,
    blocked: BTreeSet<u64>,
    /// Approach heads that accepted a gap and keep their grant until they
    /// are on the roundabout.
    committed: BTreeSet<u64>,
    warmup: f64,
    end: f64,
}

impl WorldState {
    pub fn new(network: &RoadNetwork, scenario: &Scenario, seed: u64, schedule: Vec<Arrival>) -> Self {
        WorldState {
            clock: SimClock::new(scenario.dt),
            agents: Vec::new(),
            records: Vec::new(),
            stats: RunStats::default(),
            seed,
            schedule,
            cursor: 0,
            queues: alloc::vec![VecDeque::new(); network.links.len()],
            next_id: 0,
            occ: Occupancy::new(network),
            held: Vec::new(),
            blocked: BTreeSet::new(),
            committed: BTreeSet::new(),
            warmup: scenario.warmup,
            end: scenario.duration,
        }
    }

    /// Places an agent directly (tests and hand-built scenes). Counts as an
    /// injection.
    pub fn add_agent(&mut self, network: &RoadNetwork, mut agent: VehicleAgent) {
        agent.id = self.next_id;
        self.next_id += 1;
        self.stats.injected += 1;
        self.occ.insert(network, agent.kinematics.lane, view(&agent));
        self.agents.push(agent);
        self.held.push(false);
    }

    /// Arrivals that are due but could not enter yet.
    pub fn queued(&self) -> usize {
        self.queues.iter().map(VecDeque::len).sum()
    }

    /// Arrivals waiting outside the network for room on `link`.
    pub fn queued_on(&self, link: crate::network::LinkId) -> usize {
        self.queues[link.index()].len()
    }

    pub fn occupancy(&self) -> &Occupancy {
        &self.occ
    }

    fn rebuild_occupancy(&mut self, network: &RoadNetwork) {
        self.occ.clear();
        for a in &self.agents {
            self.occ.push(network, a.kinematics.lane, view(a));
        }
        self.occ.sort();
    }

    /// Advances the world by one clock step.
    pub fn step(&mut self, network: &RoadNetwork, scenario: &Scenario) -> Result<(), SimError> {
        let plans = self.decide(network, scenario)?;
        let changed = self.apply_lane_changes(network, scenario, &plans);
        self.integrate(network, scenario, &plans, changed)?;
        self.rebuild_occupancy(network);
        let t_new = (self.clock.step + 1) as f64 * self.clock.dt;
        self.inject(network, scenario, t_new);
        self.clock.advance();
        self.stats.steps = self.clock.step;

        let interval = scenario.effective_check_interval() as u64;
        if self.clock.step % interval == 0 {
            self.check_invariants(network, scenario)?;
        }
        Ok(())
    }

    /// Phase one: every decision reads the state at `t` only.
    fn decide(&mut self, network: &RoadNetwork, scenario: &Scenario) -> Result<Vec<Plan>, SimError> {
        let th = &scenario.thresholds;
        let granted = self.entry_grants(network, scenario);
        let mut plans = Vec::with_capacity(self.agents.len());
        for agent in &self.agents {
            let me = view(agent);
            let lane = agent.kinematics.lane;
            let link = network.link(lane.link);
            let next = network.next_on_route(agent.route, agent.route_pos);
            let connects = next.is_none_or(|nx| link.connection(lane.lane, nx).is_some());
            let yields = next.is_some_and(|nx| {
                link.kind == LinkKind::Approach
                    && network.link(nx).kind == LinkKind::RoundaboutArc
                    && !granted.contains(&agent.id)
            });
            let held = !connects || yields;
            if !connects && self.blocked.insert(agent.id) {
                self.stats.blocked_merges += 1;
            }

            let v = agent.kinematics.v;
            let ahead = same_lane_leader(network, &self.occ, &me, lane);
            let beyond = if held {
                None
            } else {
                leader_beyond(network, &self.occ, &me, lane, th.scan_horizon, true)
            };
            let leader = ahead.or(beyond);
            let mut candidates: Vec<(Option<u64>, LeaderContext)> = Vec::with_capacity(3);
            candidates.extend(ahead.iter().chain(beyond.iter()).map(|l| (Some(l.occupant.id), l.context(v))));
            if held {
                candidates.push((None, LeaderContext::stop_line(link.length - agent.kinematics.x, v)));
            }
            let follower = FollowerView {
                v,
                v_desired: agent.v_desired,
                reaction_time: agent.reaction_time,
                class: &agent.class,
            };
            let dt = self.clock.dt;
            let mut chosen: Option<(DrivingState, f64)> = None;
            for (id, ctx) in &candidates {
                let r = acceleration(&follower, Some(ctx), &scenario.ghr, &th.state, dt)
                    .map_err(|e| self.fault(e, agent.id, *id))?;
                if chosen.is_none_or(|c| r.1 < c.1) {
                    chosen = Some(r);
                }
            }
            let (state, a) = match chosen {
                Some(c) => c,
                None => acceleration(&follower, None, &scenario.ghr, &th.state, dt)?,
            };
            let clearance = candidates.iter().map(|(_, c)| c.delta_x).reduce(f64::min);

            let change = if link.lane_count() > 1 {
                let input = LaneChangeInput {
                    v,
                    v_desired: agent.v_desired,
                    leader_v: leader.map(|l| l.occupant.v),
                    left: self.adjacent(network, scenario, agent, LaneAction::MoveLeft),
                    right: self.adjacent(network, scenario, agent, LaneAction::MoveRight),
                    current_connects: connects,
                    distance_to_end: link.length - agent.kinematics.x,
                };
                evaluate_lane_change(&input, &th.lane_change)
            } else {
                LaneChangeDecision::STAY
            };

            plans.push(Plan {
                state,
                a,
                held,
                clearance,
                change,
            });
        }
        Ok(plans)
    }

    /// Agents allowed to enter the roundabout this step: per approach, only
    /// the lane head closest to the yield line may ask, and only from within
    /// the decision distance. A granted head keeps its grant while it could
    /// no longer stop comfortably before the line.
    fn entry_grants(&mut self, network: &RoadNetwork, scenario: &Scenario) -> Vec<u64> {
        let th = &scenario.thresholds;
        self.committed
            .retain(|id| self.agents.iter().any(|a| a.id == *id && network.link(a.kinematics.lane.link).kind == LinkKind::Approach));
        for agent in self.agents.iter().filter(|a| self.committed.contains(&a.id)) {
            self.occ.mark_committed(network, agent.kinematics.lane, agent.id);
        }
        let mut out = Vec::new();
        for link in network.links.iter().filter(|l| l.kind == LinkKind::Approach) {
            let mut best: Option<(OccupantView, u8)> = None;
            for lane in 0..link.lane_count() {
                let Some(head) = self.occ.lane(network, LaneRef::new(link.id, lane)).last() else {
                    continue;
                };
                let Some(nx) = network.next_on_route(head.route, head.route_pos as usize) else {
                    continue;
                };
                if network.link(nx).kind != LinkKind::RoundaboutArc || link.connection(lane, nx).is_none() {
                    continue;
                }
                let rank = |o: &OccupantView| (self.committed.contains(&o.id), o.x);
                if best.is_none_or(|(b, _)| rank(head) > rank(&b)) {
                    best = Some((*head, lane));
                }
            }
            let Some((head, lane)) = best else { continue };
            let remaining = link.length - head.x;
            let was_committed = self.committed.contains(&head.id);
            if !was_committed && remaining > th.entry_decision_distance {
                continue;
            }
            let nx = network
                .next_on_route(head.route, head.route_pos as usize)
                .expect("checked above");
            let mut decision = roundabout_entry_check(network, &self.occ, &head, nx, th.critical_gap, th.entry_buffer);
            if was_committed && decision == EntryDecision::Yield {
                // Keep going unless a normal stop before the line is possible.
                let brake = self
                    .agents
                    .iter()
                    .find(|a| a.id == head.id)
                    .map_or(0.0, |a| a.class.a_normal.abs());
                if head.v * head.v > 2.0 * brake * remaining {
                    decision = EntryDecision::Proceed;
                }
            }
            if decision == EntryDecision::Proceed {
                self.occ.mark_committed(network, LaneRef::new(link.id, lane), head.id);
                out.push(head.id);
            }
        }
        self.committed = out.iter().copied().collect();
        out
    }

    fn adjacent(
        &self,
        network: &RoadNetwork,
        scenario: &Scenario,
        agent: &VehicleAgent,
        action: LaneAction,
    ) -> Option<AdjacentLane> {
        let lane = agent.kinematics.lane;
        let link = network.link(lane.link);
        let target = target_lane(lane, action, link.lane_count())?;
        let (leader, lag) = self.target_gaps(network, scenario, agent, target);
        let connects = network
            .next_on_route(agent.route, agent.route_pos)
            .is_none_or(|nx| link.connection(target.lane, nx).is_some());
        Some(AdjacentLane { leader, lag, connects })
    }

    fn target_gaps(
        &self,
        network: &RoadNetwork,
        scenario: &Scenario,
        agent: &VehicleAgent,
        target: LaneRef,
    ) -> (Option<NeighborGap>, Option<NeighborGap>) {
        let x = agent.kinematics.x;
        let leader = self
            .occ
            .ahead_on_lane(network, target, x, agent.id)
            .map(|o| NeighborGap { gap: o.x - o.length - x, v: o.v });
        let lag = lag_of(
            network,
            &self.occ,
            target,
            x,
            agent.id,
            agent.class.length,
            scenario.thresholds.scan_horizon,
        )
        .map(|l| NeighborGap { gap: l.gap, v: l.occupant.v });
        (leader, lag)
    }

    /// Phase two, first part: lane changes in agent order, each re-checked
    /// against the occupancy left by the ones before it.
    fn apply_lane_changes(&mut self, network: &RoadNetwork, scenario: &Scenario, plans: &[Plan]) -> bool {
        let params = &scenario.thresholds.lane_change;
        let mut any = false;
        for (i, plan) in plans.iter().enumerate() {
            if plan.change.action == LaneAction::Stay {
                continue;
            }
            let agent = &self.agents[i];
            let from = agent.kinematics.lane;
            let count = network.link(from.link).lane_count();
            let Some(target) = target_lane(from, plan.change.action, count) else {
                continue;
            };
            let (lead, lag) = self.target_gaps(network, scenario, agent, target);
            if !params.accepts(agent.kinematics.v, lead, lag) {
                continue;
            }
            let agent = &mut self.agents[i];
            let changed = crate::lanechange::execute_lane_change(
                agent,
                &plan.change,
                count,
                lead.map(|g| g.gap),
                lag.map(|g| g.gap),
            )
            .unwrap_or(false);
            if changed {
                let v = self.occ.remove(network, from, agent.id).unwrap_or_else(|| view(agent));
                self.occ.insert(network, target, v);
                self.stats.lane_changes += 1;
                any = true;
            }
        }
        any
    }

    /// Phase two, second part: integration, link transfer, zone bookkeeping
    /// and retirement.
    fn integrate(
        &mut self,
        network: &RoadNetwork,
        scenario: &Scenario,
        plans: &[Plan],
        any_change: bool,
    ) -> Result<(), SimError> {
        let dt = self.clock.dt;
        let t = self.clock.t;
        let t_new = (self.clock.step + 1) as f64 * dt;
        let stop_speed = scenario.thresholds.stop_speed;

        // Speed caps against the state at `t` after lane changes.
        let mut caps = Vec::with_capacity(plans.len());
        for (agent, plan) in self.agents.iter().zip(plans) {
            let clearance = if any_change {
                let me = view(agent);
                let lane = agent.kinematics.lane;
                let horizon = scenario.thresholds.scan_horizon;
                let ahead = same_lane_leader(network, &self.occ, &me, lane).map(|l| l.gap);
                let beyond = (!plan.held)
                    .then(|| leader_beyond(network, &self.occ, &me, lane, horizon, true))
                    .flatten()
                    .map(|l| l.gap);
                let leader = match (ahead, beyond) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                let stop = plan
                    .held
                    .then(|| network.link(lane.link).length - agent.kinematics.x);
                match (leader, stop) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                }
            } else {
                plan.clearance
            };
            caps.push(clearance.map(|c| c.max(0.0) / dt));
        }

        let mut retired = Vec::new();
        for (i, (plan, cap)) in plans.iter().zip(caps).enumerate() {
            let agent = &mut self.agents[i];
            let k = &mut agent.kinematics;
            let mut v_new = (k.v + plan.a * dt).max(0.0);
            if let Some(cap) = cap {
                if v_new > cap {
                    v_new = cap;
                    self.stats.guard_interventions += 1;
                }
            }
            let travel = v_new * dt;
            let was_in_zone = network.in_zone(k.lane.link, k.x);

            k.a = (v_new - k.v) / dt;
            k.v = v_new;
            k.x += travel;
            agent.driving_state = plan.state;

            if was_in_zone {
                let acc = &mut agent.acc;
                if acc.zone_entry.is_none() {
                    acc.zone_entry = Some(t);
                }
                acc.time_in_zone += dt;
                acc.distance += travel;
                if v_new < stop_speed {
                    acc.stopped_time += dt;
                }
            }

            let mut done = false;
            loop {
                let link = network.link(k.lane.link);
                if k.x < link.length {
                    break;
                }
                match network.next_on_route(agent.route, agent.route_pos) {
                    None => {
                        done = true;
                        break;
                    }
                    Some(nx) => {
                        if plan.held {
                            // Unreachable under the speed cap; keep the agent on the line.
                            k.x = link.length;
                            break;
                        }
                        let to_lane = link
                            .connection(k.lane.lane, nx)
                            .ok_or(SimError::Precondition("agent crossed into an unconnected link"))?;
                        k.x -= link.length;
                        k.lane = LaneRef::new(nx, to_lane);
                        agent.route_pos += 1;
                    }
                }
            }

            let acc = &mut agent.acc;
            let left_zone = done || !network.in_zone(k.lane.link, k.x);
            if acc.zone_entry.is_some() && acc.zone_exit.is_none() && left_zone {
                acc.zone_exit = Some(t_new);
                if t_new >= self.warmup && t_new <= self.end + GAP_TOLERANCE {
                    let entry = acc.zone_entry.expect("entered");
                    self.records.push(TrajectoryRecord {
                        id: agent.id,
                        class: agent.class.kind,
                        route: agent.route,
                        entry_time: entry,
                        exit_time: t_new,
                        stopped_time: acc.stopped_time.min(acc.time_in_zone),
                        distance_in_zone: acc.distance,
                        time_in_zone: acc.time_in_zone,
                    });
                }
            }
            if done {
                retired.push(i);
            }
        }
        self.held = plans.iter().map(|p| p.held).collect();
        for i in retired.into_iter().rev() {
            self.agents.remove(i);
            self.held.remove(i);
            self.stats.exited += 1;
        }
        Ok(())
    }

    /// Moves due arrivals into the entry queues and lets each queue head in
    /// when its lane has room.
    fn inject(&mut self, network: &RoadNetwork, scenario: &Scenario, t_new: f64) {
        while let Some(arr) = self.schedule.get(self.cursor) {
            if arr.time > t_new {
                break;
            }
            let first = network.route(arr.route).links[0];
            self.queues[first.index()].push_back(*arr);
            self.cursor += 1;
        }

        for li in 0..self.queues.len() {
            let link = &network.links[li];
            for _ in 0..link.lane_count() {
                let Some(arr) = self.queues[li].front().copied() else { break };
                let class = *scenario.classes.get(arr.class);
                let buffer = class.standstill_buffer();
                let reaction = class.reaction_time;

                // Lane with the most room at its upstream end.
                let mut best: Option<(u8, f64, Option<f64>)> = None;
                for lane in 0..link.lane_count() {
                    let tail = self.occ.lane(network, LaneRef::new(link.id, lane)).first();
                    let room = tail.map_or(f64::INFINITY, |o| o.x - o.length);
                    if best.is_none_or(|(_, r, _)| room > r) {
                        best = Some((lane, room, tail.map(|o| o.v)));
                    }
                }
                let Some((lane, room, tail_v)) = best else { break };
                let v = if room >= arr.v_initial * reaction + buffer {
                    arr.v_initial
                } else {
                    let slow = tail_v.map_or(arr.v_initial, |tv| tv.min(arr.v_initial));
                    if room >= slow * reaction + buffer {
                        slow
                    } else {
                        break;
                    }
                };
                self.queues[li].pop_front();
                let agent = VehicleAgent {
                    id: 0,
                    class,
                    route: arr.route,
                    route_pos: 0,
                    kinematics: KinematicState {
                        x: 0.0,
                        lane: LaneRef::new(link.id, lane),
                        v,
                        a: 0.0,
                    },
                    driving_state: DrivingState::Free,
                    v_desired: arr.v_desired,
                    reaction_time: reaction,
                    entry_time: t_new,
                    acc: Accumulators::default(),
                };
                self.add_agent(network, agent);
            }
        }
    }

    fn fault(&self, e: SimError, follower: u64, leader: Option<u64>) -> SimError {
        match e {
            SimError::Overlap { gap } | SimError::NonPositiveGap { gap } => SimError::OverlapFault {
                seed: self.seed,
                step: self.clock.step,
                leader: leader.unwrap_or(u64::MAX),
                follower,
                gap,
            },
            other => other,
        }
    }

    /// Checks no-overlap on every lane and across link boundaries for
    /// agents not waiting at a yield line, plus vehicle conservation.
    pub fn check_invariants(&self, network: &RoadNetwork, scenario: &Scenario) -> Result<(), SimError> {
        let active = self.agents.len() as u64;
        if self.stats.injected != active + self.stats.exited {
            return Err(SimError::Conservation {
                step: self.clock.step,
                injected: self.stats.injected,
                active,
                exited: self.stats.exited,
            });
        }
        let horizon = scenario.thresholds.scan_horizon;
        for (agent, held) in self.agents.iter().zip(&self.held) {
            let me = view(agent);
            let lane = agent.kinematics.lane;
            let ahead = same_lane_leader(network, &self.occ, &me, lane);
            let beyond = if *held {
                None
            } else {
                leader_beyond(network, &self.occ, &me, lane, horizon, false)
            };
            for l in ahead.iter().chain(beyond.iter()) {
                if l.gap < -GAP_TOLERANCE {
                    return Err(SimError::OverlapFault {
                        seed: self.seed,
                        step: self.clock.step,
                        leader: l.occupant.id,
                        follower: agent.id,
                        gap: l.gap,
                    });
                }
            }
        }
        Ok(())
    }

    /// Agents inside the zone that have not left it.
    pub fn censored(&self) -> usize {
        self.agents
            .iter()
            .filter(|a| a.acc.zone_entry.is_some() && a.acc.zone_exit.is_none())
            .count()
    }
}

fn view(a: &VehicleAgent) -> OccupantView {
    OccupantView {
        id: a.id,
        x: a.kinematics.x,
        v: a.kinematics.v,
        a: a.kinematics.a,
        length: a.class.length,
        route: a.route,
        route_pos: a.route_pos as u16,
        committed: false,
    }
}

/// Runs one replication of `scenario` on `network`.
pub fn run_replication(
    scenario: &Scenario,
    network: &RoadNetwork,
    rep_index: u32,
) -> Result<ReplicationResult, SimError> {
    scenario.validate()?;
    let seed = replication_seed(scenario.seed, rep_index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let demand = scale_volume(&scenario.demand(), scenario.volume_multiplier)?;
    let schedule = arrival_schedule(&demand, &scenario.classes, scenario.duration, scenario.legal_speed, &mut rng);

    let mut world = WorldState::new(network, scenario, seed, schedule);
    for _ in 0..scenario.steps() {
        world.step(network, scenario)?;
    }
    let mut stats = world.stats;
    stats.active = world.agents.len() as u64;
    stats.queued = world.queued() as u64;
    let censored = world.censored();
    let aggregate = aggregate(&world.records, censored)?;
    Ok(ReplicationResult {
        rep_index,
        seed,
        records: world.records,
        aggregate,
        stats,
    })
}

/// Runs every replication in index order.
pub fn run_experiment(scenario: &Scenario) -> Result<Vec<ReplicationResult>, SimError> {
    scenario.validate()?;
    let network = scenario.network()?;
    (0..scenario.replications)
        .map(|i| {
            run_replication(scenario, &network, i).map_err(|e| SimError::Replication {
                index: i,
                source: Box::new(e),
            })
        })
        .collect()
}
