//! Lane occupancy index and the spatial queries built on it.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{LaneRef, LinkId, LinkKind, RoadNetwork, RouteId};
use crate::types::LeaderContext;

/// Snapshot of one vehicle as seen by its neighbours.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OccupantView {
    pub id: u64,
    pub x: f64,
    pub v: f64,
    pub a: f64,
    pub length: f64,
    pub route: RouteId,
    pub route_pos: u16,
    /// Cleared to enter the roundabout this step.
    pub committed: bool,
}

impl OccupantView {
    fn key_cmp(&self, x: f64, id: u64) -> Ordering {
        self.x.total_cmp(&x).then(self.id.cmp(&id))
    }

    /// Whether the vehicle's route continues onto `link` right after its
    /// current link.
    pub fn heads_to(&self, network: &RoadNetwork, link: LinkId) -> bool {
        network.next_on_route(self.route, self.route_pos as usize) == Some(link)
    }
}

/// Vehicles per lane, sorted by position (ties broken by id).
#[derive(Debug, Clone, Default)]
pub struct Occupancy {
    lanes: Vec<Vec<OccupantView>>,
}

impl Occupancy {
    pub fn new(network: &RoadNetwork) -> Self {
        Occupancy {
            lanes: alloc::vec![Vec::new(); network.lane_slot_count()],
        }
    }

    pub fn clear(&mut self) {
        for l in &mut self.lanes {
            l.clear();
        }
    }

    /// Appends without sorting; call [`Occupancy::sort`] afterwards.
    pub fn push(&mut self, network: &RoadNetwork, lane: LaneRef, view: OccupantView) {
        self.lanes[network.lane_slot(lane)].push(view);
    }

    pub fn sort(&mut self) {
        for l in &mut self.lanes {
            l.sort_by(|a, b| a.key_cmp(b.x, b.id));
        }
    }

    /// Inserts keeping the lane sorted.
    pub fn insert(&mut self, network: &RoadNetwork, lane: LaneRef, view: OccupantView) {
        let l = &mut self.lanes[network.lane_slot(lane)];
        let at = l.partition_point(|o| o.key_cmp(view.x, view.id) == Ordering::Less);
        l.insert(at, view);
    }

    pub fn remove(&mut self, network: &RoadNetwork, lane: LaneRef, id: u64) -> Option<OccupantView> {
        let l = &mut self.lanes[network.lane_slot(lane)];
        let at = l.iter().position(|o| o.id == id)?;
        Some(l.remove(at))
    }

    /// Flags vehicle `id` on `lane` as cleared to enter the roundabout.
    pub fn mark_committed(&mut self, network: &RoadNetwork, lane: LaneRef, id: u64) {
        if let Some(o) = self.lanes[network.lane_slot(lane)].iter_mut().find(|o| o.id == id) {
            o.committed = true;
        }
    }

    pub fn lane(&self, network: &RoadNetwork, lane: LaneRef) -> &[OccupantView] {
        &self.lanes[network.lane_slot(lane)]
    }

    /// First vehicle strictly ahead of `(x, id)` on `lane`.
    pub fn ahead_on_lane(&self, network: &RoadNetwork, lane: LaneRef, x: f64, id: u64) -> Option<&OccupantView> {
        let l = self.lane(network, lane);
        let at = l.partition_point(|o| o.key_cmp(x, id) != Ordering::Greater);
        l.get(at)
    }

    /// Last vehicle strictly behind `(x, id)` on `lane`.
    pub fn behind_on_lane(&self, network: &RoadNetwork, lane: LaneRef, x: f64, id: u64) -> Option<&OccupantView> {
        let l = self.lane(network, lane);
        let at = l.partition_point(|o| o.key_cmp(x, id) == Ordering::Less);
        at.checked_sub(1).map(|i| &l[i])
    }
}

/// A leader and the space headway to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Leader {
    pub occupant: OccupantView,
    pub gap: f64,
}

impl Leader {
    pub fn context(&self, follower_v: f64) -> LeaderContext {
        LeaderContext::new(
            self.gap,
            follower_v,
            self.occupant.v,
            self.occupant.a,
            self.occupant.length,
        )
    }
}

/// A lag vehicle on a target lane and the headway from it to the subject.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagVehicle {
    pub occupant: OccupantView,
    pub gap: f64,
}

/// Nearest vehicle ahead of `me` on `lane`.
///
/// When the lane is empty ahead and `cross_links` is set, falls back to the
/// first vehicle past the end of the link along `me`'s route, see
/// [`leader_beyond`].
pub fn leader_of(
    network: &RoadNetwork,
    occ: &Occupancy,
    me: &OccupantView,
    lane: LaneRef,
    cross_links: bool,
    horizon: f64,
) -> Option<Leader> {
    same_lane_leader(network, occ, me, lane).or_else(|| {
        if cross_links {
            leader_beyond(network, occ, me, lane, horizon, false)
        } else {
            None
        }
    })
}

pub fn same_lane_leader(network: &RoadNetwork, occ: &Occupancy, me: &OccupantView, lane: LaneRef) -> Option<Leader> {
    occ.ahead_on_lane(network, lane, me.x, me.id).map(|o| Leader {
        occupant: *o,
        gap: o.x - o.length - me.x,
    })
}

/// First vehicle past the end of `me`'s current link along its route, within
/// `horizon` meters.
///
/// The search follows the connected lanes of the next links. With
/// `with_entrants`, a vehicle cleared to merge into one of those lanes from
/// another feeder counts too when it is closer to the merge than `me`,
/// placed behind the lane start by its remaining distance. While that
/// placement would overlap `me`, the merge point itself acts as a stopped
/// leader.
pub fn leader_beyond(
    network: &RoadNetwork,
    occ: &Occupancy,
    me: &OccupantView,
    lane: LaneRef,
    horizon: f64,
    with_entrants: bool,
) -> Option<Leader> {
    let mut scanned = network.link(lane.link).length - me.x;
    let mut cur = lane;
    let mut pos = me.route_pos as usize;
    while scanned <= horizon {
        let next = network.next_on_route(me.route, pos)?;
        let next_link = network.link(next);
        let to_lane = network
            .link(cur.link)
            .connection(cur.lane, next)
            .unwrap_or_else(|| cur.lane.min(next_link.lane_count() - 1));
        let from = cur;
        cur = LaneRef::new(next, to_lane);

        let mut best = occ.lane(network, cur).first().map(|tail| Leader {
            occupant: *tail,
            gap: scanned + tail.x - tail.length,
        });
        if with_entrants {
            for &feeder in network.feeders(cur) {
                if feeder == from {
                    continue;
                }
                let Some(o) = occ.lane(network, feeder).last() else { continue };
                if !o.committed || !o.heads_to(network, next) {
                    continue;
                }
                let remaining = network.link(feeder.link).length - o.x;
                if remaining >= scanned {
                    // Behind us relative to the merge.
                    continue;
                }
                let projected = scanned - remaining - o.length;
                // Until its body is clear of our projection, hold at the merge.
                let cand = if projected >= 0.0 {
                    Leader { occupant: *o, gap: projected }
                } else {
                    Leader {
                        occupant: OccupantView { v: 0.0, a: 0.0, ..*o },
                        gap: scanned,
                    }
                };
                if best.is_none_or(|b| cand.gap < b.gap) {
                    best = Some(cand);
                }
            }
        }
        if let Some(b) = best {
            return (b.gap <= horizon).then_some(b);
        }
        scanned += next_link.length;
        pos += 1;
    }
    None
}

/// Nearest vehicle behind a (possibly hypothetical) position `x` on `lane`,
/// looking back through feeding lanes for vehicles whose route continues onto
/// `lane.link`. `length` is the subject's body length.
pub fn lag_of(
    network: &RoadNetwork,
    occ: &Occupancy,
    lane: LaneRef,
    x: f64,
    id: u64,
    length: f64,
    horizon: f64,
) -> Option<LagVehicle> {
    let rear = x - length;
    if let Some(o) = occ.behind_on_lane(network, lane, x, id) {
        return Some(LagVehicle {
            occupant: *o,
            gap: rear - o.x,
        });
    }
    lag_upstream(network, occ, lane, rear, horizon, 0)
}

fn lag_upstream(
    network: &RoadNetwork,
    occ: &Occupancy,
    lane: LaneRef,
    rear: f64,
    horizon: f64,
    depth: u8,
) -> Option<LagVehicle> {
    if depth > 4 {
        return None;
    }
    let mut best: Option<LagVehicle> = None;
    for &feeder in network.feeders(lane) {
        let up = network.link(feeder.link);
        let found = occ
            .lane(network, feeder)
            .iter()
            .rev()
            .find(|o| o.heads_to(network, lane.link))
            .map(|o| LagVehicle {
                occupant: *o,
                gap: rear + up.length - o.x,
            })
            .or_else(|| {
                let reach = rear + up.length;
                if reach > horizon {
                    None
                } else {
                    lag_upstream(network, occ, feeder, reach, horizon, depth + 1)
                }
            });
        if let Some(f) = found {
            if best.map_or(true, |b| f.gap < b.gap) {
                best = Some(f);
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryDecision {
    Proceed,
    Yield,
}

/// Yield rule at a roundabout entry.
///
/// The entering vehicle yields when a circulating vehicle that will pass the
/// conflict node reaches it within `critical_gap` seconds at its current
/// speed, when such a vehicle is closer to the node than the entering
/// vehicle's remaining distance plus its body plus `buffer` meters, or when the last vehicle that entered the arc has
/// not yet cleared the merge (`gap_to_tail < 0`).
pub fn roundabout_entry_check(
    network: &RoadNetwork,
    occ: &Occupancy,
    entering: &OccupantView,
    arc: LinkId,
    critical_gap: f64,
    buffer: f64,
) -> EntryDecision {
    debug_assert_eq!(network.link(arc).kind, LinkKind::RoundaboutArc);
    let node = network.link(arc).from;
    let cycle = &network.arc_cycle;
    let Some(start) = cycle.iter().position(|l| network.link(*l).to == node) else {
        return EntryDecision::Proceed;
    };

    // Merge still occupied by the tail of the target lane?
    let entering_link = network.link(network.route(entering.route).links[entering.route_pos as usize]);
    let remaining = entering_link.length - entering.x;
    if let Some(tail) = occ.lane(network, LaneRef::new(arc, 0)).first() {
        if remaining + tail.x - tail.length < 0.0 {
            return EntryDecision::Yield;
        }
    }

    let mut base = 0.0;
    for k in 0..cycle.len() {
        let up = cycle[(start + cycle.len() - k) % cycle.len()];
        let up_link = network.link(up);
        for o in occ.lane(network, LaneRef::new(up, 0)).iter().rev() {
            if !passes_through(network, o, arc) {
                continue;
            }
            let dist = base + up_link.length - o.x;
            if dist < remaining + entering.length + buffer {
                return EntryDecision::Yield;
            }
            if o.v > 0.0 && dist / o.v < critical_gap {
                return EntryDecision::Yield;
            }
        }
        // Entrants already cleared onto `up` count from their yield line.
        for &feeder in network.feeders(LaneRef::new(up, 0)) {
            let f_link = network.link(feeder.link);
            if f_link.kind == LinkKind::RoundaboutArc {
                continue;
            }
            let Some(o) = occ.lane(network, feeder).last() else { continue };
            if o.id == entering.id || !o.committed || !passes_through(network, o, arc) {
                continue;
            }
            let dist = base + up_link.length + f_link.length - o.x;
            if dist < remaining + entering.length + buffer {
                return EntryDecision::Yield;
            }
            if o.v > 0.0 && dist / o.v < critical_gap {
                return EntryDecision::Yield;
            }
        }
        base += up_link.length;
    }
    EntryDecision::Proceed
}

fn passes_through(network: &RoadNetwork, o: &OccupantView, arc: LinkId) -> bool {
    network.route(o.route).links[o.route_pos as usize + 1..].contains(&arc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{br_links::*, build_br_network, InfraVariant};

    fn view(id: u64, x: f64, v: f64, length: f64, route: u8, pos: u16) -> OccupantView {
        OccupantView {
            id,
            x,
            v,
            a: 0.0,
            length,
            route: RouteId::new(route).unwrap(),
            route_pos: pos,
            committed: false,
        }
    }

    #[test]
    fn empty_lane_has_no_leader() {
        let n = build_br_network(InfraVariant::Id0);
        let occ = Occupancy::new(&n);
        let me = view(1, 10.0, 5.0, 4.0, 1, 0);
        assert!(leader_of(&n, &occ, &me, LaneRef::new(GPSA_EB_APPROACH, 0), true, 200.0).is_none());
    }

    #[test]
    fn same_lane_leader_gap() {
        let n = build_br_network(InfraVariant::Id0);
        let mut occ = Occupancy::new(&n);
        let lane = LaneRef::new(GPSA_EB_APPROACH, 0);
        let me = view(1, 0.0, 5.0, 4.0, 1, 0);
        occ.insert(&n, lane, me);
        occ.insert(&n, lane, view(2, 30.0, 5.0, 4.0, 1, 0));
        let l = leader_of(&n, &occ, &me, lane, true, 200.0).unwrap();
        assert_eq!(l.occupant.id, 2);
        assert_eq!(l.gap, 26.0);
    }

    #[test]
    fn leader_across_link_boundary() {
        let n = build_br_network(InfraVariant::Id0);
        let mut occ = Occupancy::new(&n);
        let lane = LaneRef::new(GPSA_EB_APPROACH, 1);
        // 10 m before the end of the approach.
        let me = view(1, 96.0, 5.0, 4.0, 1, 0);
        occ.insert(&n, lane, me);
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(2, 5.0, 5.0, 4.0, 1, 1));
        let l = leader_of(&n, &occ, &me, lane, true, 200.0).unwrap();
        assert_eq!(l.occupant.id, 2);
        assert!((l.gap - 11.0).abs() < 1e-12);
        assert!(leader_of(&n, &occ, &me, lane, false, 200.0).is_none());
    }

    #[test]
    fn scan_horizon_limits_the_search() {
        let n = build_br_network(InfraVariant::Id0);
        let mut occ = Occupancy::new(&n);
        let lane = LaneRef::new(ESR_SB_APPROACH, 0);
        let me = view(1, 0.0, 5.0, 4.0, 5, 0);
        occ.insert(&n, lane, me);
        occ.insert(&n, LaneRef::new(GPSA_WB_EXIT, 0), view(2, 100.0, 5.0, 4.0, 5, 2));
        assert!(leader_of(&n, &occ, &me, lane, true, 200.0).is_none());
        assert!(leader_of(&n, &occ, &me, lane, true, 400.0).is_some());
    }

    #[test]
    fn lag_found_on_feeding_arc() {
        let n = build_br_network(InfraVariant::Id0);
        let mut occ = Occupancy::new(&n);
        let arc_len = n.link(ARC_WEST_EAST).length;
        // On the arc, 6 m before the node, leaving onto the DOST exit.
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(2, arc_len - 6.0, 5.0, 4.0, 1, 1));
        // A circulating vehicle that continues does not count.
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(3, arc_len - 1.0, 5.0, 4.0, 2, 1));
        let lag = lag_of(&n, &occ, LaneRef::new(GPSA_EB_EXIT, 0), 10.0, 1, 4.0, 200.0).unwrap();
        assert_eq!(lag.occupant.id, 2);
        assert!((lag.gap - 12.0).abs() < 1e-9);
    }

    #[test]
    fn entry_check_empty_roundabout_proceeds() {
        let n = build_br_network(InfraVariant::Id0);
        let occ = Occupancy::new(&n);
        let me = view(1, 100.0, 0.0, 4.0, 3, 0);
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_EAST_NORTH, 3.0, 2.0),
            EntryDecision::Proceed
        );
    }

    #[test]
    fn entry_check_time_to_conflict() {
        let n = build_br_network(InfraVariant::Id0);
        let len = n.link(ARC_WEST_EAST).length;
        let me = view(1, 100.0, 0.0, 4.0, 3, 0);

        // Route 2 continues from the W-E arc onto the E-N arc: a conflict.
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(2, len - 10.0, 10.0, 4.0, 2, 1));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_EAST_NORTH, 3.0, 2.0),
            EntryDecision::Yield
        );

        // From the far end of the W-E arc (53.4 m) at 2 m/s: 26.7 s, well clear.
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(4, 0.0, 2.0, 4.0, 2, 1));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_EAST_NORTH, 3.0, 2.0),
            EntryDecision::Proceed
        );
    }

    #[test]
    fn entry_check_ignores_exiting_vehicles() {
        let n = build_br_network(InfraVariant::Id0);
        let len = n.link(ARC_WEST_EAST).length;
        let me = view(1, 100.0, 0.0, 4.0, 3, 0);
        let mut occ = Occupancy::new(&n);
        // Route 1 exits at the east node.
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(2, len - 3.0, 10.0, 4.0, 1, 1));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_EAST_NORTH, 3.0, 2.0),
            EntryDecision::Proceed
        );
    }

    #[test]
    fn entry_check_spatial_block_for_stopped_vehicle() {
        let n = build_br_network(InfraVariant::Id0);
        let len = n.link(ARC_WEST_EAST).length;
        let me = view(1, 100.0, 0.0, 4.0, 3, 0);
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(2, len - 1.0, 0.0, 4.0, 2, 1));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_EAST_NORTH, 3.0, 2.0),
            EntryDecision::Yield
        );
    }

    #[test]
    fn entry_check_waits_for_merge_to_clear() {
        let n = build_br_network(InfraVariant::Id0);
        let me = view(1, 100.0, 0.0, 4.0, 3, 0);
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, LaneRef::new(ARC_EAST_NORTH, 0), view(2, 2.0, 3.0, 4.5, 2, 2));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_EAST_NORTH, 3.0, 2.0),
            EntryDecision::Yield
        );
    }

    fn committed(mut o: OccupantView) -> OccupantView {
        o.committed = true;
        o
    }

    #[test]
    fn committed_entrant_projected_as_leader() {
        let n = build_br_network(InfraVariant::Id0);
        let arc = n.link(ARC_EAST_NORTH).length;
        let lane = LaneRef::new(ARC_EAST_NORTH, 0);
        // 20 m before the north node, continuing onto the N-W arc.
        let me = view(1, arc - 20.0, 6.0, 4.0, 3, 1);
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, lane, me);
        let esr = LaneRef::new(ESR_SB_APPROACH, 0);
        occ.insert(&n, esr, view(2, 148.0, 2.0, 4.5, 5, 0));
        assert!(leader_beyond(&n, &occ, &me, lane, 200.0, true).is_none());

        let mut occ2 = Occupancy::new(&n);
        occ2.insert(&n, lane, me);
        occ2.insert(&n, esr, committed(view(2, 148.0, 2.0, 4.5, 5, 0)));
        let l = leader_beyond(&n, &occ2, &me, lane, 200.0, true).unwrap();
        assert_eq!(l.occupant.id, 2);
        assert!((l.gap - (20.0 - 2.0 - 4.5)).abs() < 1e-9);
        assert_eq!(l.occupant.v, 2.0);
        assert!(leader_beyond(&n, &occ2, &me, lane, 200.0, false).is_none());
    }

    #[test]
    fn overlapping_projection_holds_at_merge() {
        let n = build_br_network(InfraVariant::Id0);
        let arc = n.link(ARC_EAST_NORTH).length;
        let lane = LaneRef::new(ARC_EAST_NORTH, 0);
        let me = view(1, arc - 20.0, 6.0, 4.0, 3, 1);
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, lane, me);
        // A bus 10 m from its line: its rear projects past us.
        occ.insert(&n, LaneRef::new(ESR_SB_APPROACH, 0), committed(view(2, 140.0, 5.0, 11.54, 5, 0)));
        let l = leader_beyond(&n, &occ, &me, lane, 200.0, true).unwrap();
        assert!((l.gap - 20.0).abs() < 1e-9);
        assert_eq!(l.occupant.v, 0.0);
    }

    #[test]
    fn entrant_behind_us_is_not_a_leader() {
        let n = build_br_network(InfraVariant::Id0);
        let arc = n.link(ARC_EAST_NORTH).length;
        let lane = LaneRef::new(ARC_EAST_NORTH, 0);
        let me = view(1, arc - 20.0, 6.0, 4.0, 3, 1);
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, lane, me);
        occ.insert(&n, LaneRef::new(ESR_SB_APPROACH, 0), committed(view(2, 125.0, 5.0, 4.5, 5, 0)));
        assert!(leader_beyond(&n, &occ, &me, lane, 200.0, true).is_none());
    }

    #[test]
    fn entry_check_counts_committed_upstream_entrant() {
        let n = build_br_network(InfraVariant::Id0);
        let me = view(1, 149.5, 0.0, 4.5, 5, 0);
        let approach = LaneRef::new(GPSA_WB_APPROACH, 0);
        // Cleared at the east node, 1 m from its line, bound through the north node.
        let fast = view(2, 99.0, 6.0, 4.5, 3, 0);
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, approach, fast);
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_NORTH_WEST, 3.0, 2.0),
            EntryDecision::Proceed
        );
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, approach, committed(fast));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_NORTH_WEST, 3.0, 2.0),
            EntryDecision::Yield
        );
        // Slow enough to be more than 3 s away.
        let mut occ = Occupancy::new(&n);
        occ.insert(&n, approach, committed(view(2, 99.0, 3.0, 4.5, 3, 0)));
        assert_eq!(
            roundabout_entry_check(&n, &occ, &me, ARC_NORTH_WEST, 3.0, 2.0),
            EntryDecision::Proceed
        );
    }

    #[test]
    fn spatial_margin_includes_remaining_distance() {
        let n = build_br_network(InfraVariant::Id0);
        let len = n.link(ARC_WEST_EAST).length;
        let mut occ = Occupancy::new(&n);
        // Stopped circulating vehicle 15 m from the east node.
        occ.insert(&n, LaneRef::new(ARC_WEST_EAST, 0), view(2, len - 15.0, 0.0, 4.0, 2, 1));
        let near = view(1, 99.5, 0.0, 4.5, 3, 0);
        let far = view(1, 90.0, 0.0, 4.5, 3, 0);
        assert_eq!(roundabout_entry_check(&n, &occ, &near, ARC_EAST_NORTH, 3.0, 2.0), EntryDecision::Proceed);
        assert_eq!(roundabout_entry_check(&n, &occ, &far, ARC_EAST_NORTH, 3.0, 2.0), EntryDecision::Yield);
    }
}
