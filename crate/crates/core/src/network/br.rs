//! The three-road fork around the roundabout and its widening variants.
//!
//! GPSA runs ENE-WSW through the roundabout; ESR joins from the NNE. The
//! roundabout is a single counterclockwise lane (right-hand traffic) on a
//! circle of 34 m inscribed diameter. The three connection points sit at the
//! compass bearings of their roads, which splits the circle into arcs of
//! 180 deg (W to E), 45 deg (E to N) and 135 deg (N to W).

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{
    Connection, InfraVariant, Lane, LaneRef, Link, LinkId, LinkKind, MeasurementZone, Node,
    NodeId, NodeKind, RoadNetwork, Route, RouteId,
};
use crate::types::DEFAULT_LEGAL_SPEED;

pub const ROUNDABOUT_DIAMETER: f64 = 34.0;

/// Compass bearings (clockwise from north) of the west, east and north
/// connection points.
pub const ARC_BEARINGS_DEG: [f64; 3] = [247.5, 67.5, 22.5];

const PNR_APPROACH: f64 = 106.0;
const DOST_APPROACH: f64 = 100.0;
const ESR_APPROACH: f64 = 150.0;

pub mod nodes {
    use super::NodeId;
    pub const PNR: NodeId = NodeId(0);
    pub const DOST: NodeId = NodeId(1);
    pub const PNCC: NodeId = NodeId(2);
    pub const BR_WEST: NodeId = NodeId(3);
    pub const BR_EAST: NodeId = NodeId(4);
    pub const BR_NORTH: NodeId = NodeId(5);
}

pub mod links {
    use super::LinkId;
    /// PNR to roundabout, eastbound.
    pub const GPSA_EB_APPROACH: LinkId = LinkId(0);
    /// Roundabout to PNR, westbound.
    pub const GPSA_WB_EXIT: LinkId = LinkId(1);
    /// DOST to roundabout, westbound.
    pub const GPSA_WB_APPROACH: LinkId = LinkId(2);
    /// Roundabout to DOST, eastbound.
    pub const GPSA_EB_EXIT: LinkId = LinkId(3);
    /// PNCC to roundabout, southbound.
    pub const ESR_SB_APPROACH: LinkId = LinkId(4);
    /// Roundabout to PNCC, northbound.
    pub const ESR_NB_EXIT: LinkId = LinkId(5);
    pub const ARC_WEST_EAST: LinkId = LinkId(6);
    pub const ARC_EAST_NORTH: LinkId = LinkId(7);
    pub const ARC_NORTH_WEST: LinkId = LinkId(8);
}

/// Knobs of the generated network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkParams {
    pub legal_speed: f64,
    pub lane_width: f64,
    pub zone: MeasurementZone,
}

impl Default for NetworkParams {
    fn default() -> Self {
        NetworkParams {
            legal_speed: DEFAULT_LEGAL_SPEED,
            lane_width: 3.0,
            zone: MeasurementZone::default(),
        }
    }
}

fn arc_length(from_bearing: f64, to_bearing: f64) -> f64 {
    // Counterclockwise travel decreases the bearing.
    let raw = libm::fmod(from_bearing - to_bearing, 360.0);
    let sweep = if raw < 0.0 { raw + 360.0 } else { raw };
    PI * ROUNDABOUT_DIAMETER * sweep / 360.0
}

/// Lane counts per link id for a variant.
fn lane_counts(variant: InfraVariant) -> [u8; 9] {
    use links::*;
    let mut n = [2, 2, 2, 2, 2, 2, 1, 1, 1];
    let widen: &[LinkId] = match variant {
        InfraVariant::Id0 => &[],
        InfraVariant::Id1 => &[GPSA_EB_APPROACH, GPSA_WB_APPROACH],
        InfraVariant::Id2 => &[GPSA_EB_APPROACH, GPSA_EB_EXIT],
        InfraVariant::Id3 => &[ESR_SB_APPROACH, GPSA_WB_EXIT],
    };
    for l in widen {
        n[l.index()] = 3;
    }
    n
}

/// Builds the fork with default parameters.
pub fn build_br_network(variant: InfraVariant) -> RoadNetwork {
    build_br_network_with(variant, &NetworkParams::default())
        .expect("built-in network satisfies its invariants")
}

/// Builds the fork for `variant`.
///
/// Approach lanes all feed the single circulating lane; the circulating lane
/// feeds the next arc and the rightmost lane of the exit.
pub fn build_br_network_with(
    variant: InfraVariant,
    params: &NetworkParams,
) -> Result<RoadNetwork, crate::ConfigError> {
    use links::*;
    use nodes::*;

    let node_list = vec![
        Node { id: PNR, name: "PNR", kind: NodeKind::Boundary },
        Node { id: DOST, name: "DOST", kind: NodeKind::Boundary },
        Node { id: PNCC, name: "PNCC", kind: NodeKind::Boundary },
        Node { id: BR_WEST, name: "BR-W", kind: NodeKind::Junction },
        Node { id: BR_EAST, name: "BR-E", kind: NodeKind::Junction },
        Node { id: BR_NORTH, name: "BR-N", kind: NodeKind::Junction },
    ];

    let [west, east, north] = ARC_BEARINGS_DEG;
    let counts = lane_counts(variant);
    let layout: [(LinkId, &'static str, NodeId, NodeId, f64, LinkKind); 9] = [
        (GPSA_EB_APPROACH, "gpsa_eb_approach", PNR, BR_WEST, PNR_APPROACH, LinkKind::Approach),
        (GPSA_WB_EXIT, "gpsa_wb_exit", BR_WEST, PNR, PNR_APPROACH, LinkKind::Exit),
        (GPSA_WB_APPROACH, "gpsa_wb_approach", DOST, BR_EAST, DOST_APPROACH, LinkKind::Approach),
        (GPSA_EB_EXIT, "gpsa_eb_exit", BR_EAST, DOST, DOST_APPROACH, LinkKind::Exit),
        (ESR_SB_APPROACH, "esr_sb_approach", PNCC, BR_NORTH, ESR_APPROACH, LinkKind::Approach),
        (ESR_NB_EXIT, "esr_nb_exit", BR_NORTH, PNCC, ESR_APPROACH, LinkKind::Exit),
        (ARC_WEST_EAST, "arc_w_e", BR_WEST, BR_EAST, arc_length(west, east), LinkKind::RoundaboutArc),
        (ARC_EAST_NORTH, "arc_e_n", BR_EAST, BR_NORTH, arc_length(east, north), LinkKind::RoundaboutArc),
        (ARC_NORTH_WEST, "arc_n_w", BR_NORTH, BR_WEST, arc_length(north, west), LinkKind::RoundaboutArc),
    ];

    let mut link_list: Vec<Link> = layout
        .iter()
        .map(|&(id, name, from, to, length, kind)| Link {
            id,
            name,
            from,
            to,
            length,
            lanes: (0..counts[id.index()])
                .map(|i| Lane {
                    id: LaneRef::new(id, i),
                    index: i,
                    width: params.lane_width,
                })
                .collect(),
            legal_speed: params.legal_speed,
            kind,
            connections: Vec::new(),
        })
        .collect();

    // (approach, arc entered) and (arc, next arc, exit leaving at its end)
    let entries = [
        (GPSA_EB_APPROACH, ARC_WEST_EAST),
        (GPSA_WB_APPROACH, ARC_EAST_NORTH),
        (ESR_SB_APPROACH, ARC_NORTH_WEST),
    ];
    let circulating = [
        (ARC_WEST_EAST, ARC_EAST_NORTH, GPSA_EB_EXIT),
        (ARC_EAST_NORTH, ARC_NORTH_WEST, ESR_NB_EXIT),
        (ARC_NORTH_WEST, ARC_WEST_EAST, GPSA_WB_EXIT),
    ];
    for (approach, arc) in entries {
        let n = counts[approach.index()];
        link_list[approach.index()].connections =
            (0..n).map(|lane| Connection { from_lane: lane, to_link: arc, to_lane: 0 }).collect();
    }
    for (arc, next, exit) in circulating {
        link_list[arc.index()].connections = vec![
            Connection { from_lane: 0, to_link: next, to_lane: 0 },
            Connection { from_lane: 0, to_link: exit, to_lane: 0 },
        ];
    }

    let route = |id: u8, links: Vec<LinkId>, entry, exit| Route {
        id: RouteId::new(id).expect("route ids 1..=6"),
        links,
        entry,
        exit,
    };
    let routes = vec![
        route(1, vec![GPSA_EB_APPROACH, ARC_WEST_EAST, GPSA_EB_EXIT], PNR, DOST),
        route(2, vec![GPSA_EB_APPROACH, ARC_WEST_EAST, ARC_EAST_NORTH, ESR_NB_EXIT], PNR, PNCC),
        route(3, vec![GPSA_WB_APPROACH, ARC_EAST_NORTH, ARC_NORTH_WEST, GPSA_WB_EXIT], DOST, PNR),
        route(4, vec![GPSA_WB_APPROACH, ARC_EAST_NORTH, ESR_NB_EXIT], DOST, PNCC),
        route(5, vec![ESR_SB_APPROACH, ARC_NORTH_WEST, GPSA_WB_EXIT], PNCC, PNR),
        route(6, vec![ESR_SB_APPROACH, ARC_NORTH_WEST, ARC_WEST_EAST, GPSA_EB_EXIT], PNCC, DOST),
    ];

    RoadNetwork::new(variant, node_list, link_list, routes, params.zone)
}

#[cfg(test)]
mod tests {
    use super::links::*;
    use super::*;
    use crate::network::route_links;
    use approx::assert_abs_diff_eq;

    fn lanes(n: &RoadNetwork, l: LinkId) -> u8 {
        n.link(l).lane_count()
    }

    #[test]
    fn current_layout_distances() {
        let n = build_br_network(InfraVariant::Id0);
        assert_eq!(n.link(ESR_SB_APPROACH).length, 150.0);
        assert_eq!(n.link(GPSA_EB_APPROACH).length, 106.0);
        assert_eq!(n.link(GPSA_WB_APPROACH).length, 100.0);
        for l in [0, 1, 2, 3, 4, 5] {
            assert_eq!(lanes(&n, LinkId(l)), 2);
        }
        for l in [6, 7, 8] {
            assert_eq!(lanes(&n, LinkId(l)), 1);
        }
    }

    #[test]
    fn arc_cycle_closes_on_the_circumference() {
        let n = build_br_network(InfraVariant::Id0);
        assert_abs_diff_eq!(n.arc_cycle_length(), PI * 34.0, epsilon = 0.1);
        assert_eq!(n.arc_cycle.len(), 3);
    }

    #[test]
    fn id1_widens_only_the_approaches() {
        let n = build_br_network(InfraVariant::Id1);
        assert_eq!(lanes(&n, GPSA_EB_APPROACH), 3);
        assert_eq!(lanes(&n, GPSA_WB_APPROACH), 3);
        assert_eq!(lanes(&n, GPSA_EB_EXIT), 2);
        assert_eq!(lanes(&n, GPSA_WB_EXIT), 2);
    }

    #[test]
    fn id2_widens_eastbound_through() {
        let n = build_br_network(InfraVariant::Id2);
        assert_eq!(lanes(&n, GPSA_EB_APPROACH), 3);
        assert_eq!(lanes(&n, GPSA_EB_EXIT), 3);
        assert_eq!(lanes(&n, GPSA_WB_APPROACH), 2);
    }

    #[test]
    fn id3_widens_esr_southbound_and_westbound_exit() {
        let n = build_br_network(InfraVariant::Id3);
        assert_eq!(lanes(&n, ESR_SB_APPROACH), 3);
        assert_eq!(lanes(&n, GPSA_WB_EXIT), 3);
        assert_eq!(lanes(&n, ESR_NB_EXIT), 2);
    }

    #[test]
    fn variants_share_geometry_and_topology() {
        let base = build_br_network(InfraVariant::Id0);
        for v in InfraVariant::ALL {
            let n = build_br_network(v);
            for (a, b) in base.links.iter().zip(&n.links) {
                assert_eq!(a.length, b.length);
                assert_eq!((a.from, a.to, a.kind), (b.from, b.to, b.kind));
            }
            assert_eq!(base.routes, n.routes);
        }
    }

    #[test]
    fn route_definitions() {
        let n = build_br_network(InfraVariant::Id0);
        assert_eq!(*route_links(&n, 5).unwrap().last().unwrap(), GPSA_WB_EXIT);
        let arcs = |r: u8| {
            route_links(&n, r)
                .unwrap()
                .iter()
                .filter(|l| n.link(**l).kind == LinkKind::RoundaboutArc)
                .count()
        };
        assert_eq!(arcs(1), 1);
        assert_eq!(arcs(2), 2);
        assert_eq!(arcs(4), 1);
        assert_eq!(arcs(5), 1);
        assert_eq!(arcs(6), 2);
        assert!(matches!(route_links(&n, 7), Err(crate::SimError::UnknownRoute(7))));
        assert!(route_links(&n, 0).is_err());
    }

    #[test]
    fn every_route_is_connected_lane_wise() {
        for v in InfraVariant::ALL {
            let n = build_br_network(v);
            for r in &n.routes {
                for w in r.links.windows(2) {
                    let from = n.link(w[0]);
                    for lane in 0..from.lane_count() {
                        assert!(from.connection(lane, w[1]).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn zone_covers_arcs_and_approach_tails() {
        let n = build_br_network(InfraVariant::Id0);
        assert!(n.in_zone(ARC_EAST_NORTH, 0.0));
        assert!(n.in_zone(ESR_SB_APPROACH, 120.0));
        assert!(!n.in_zone(ESR_SB_APPROACH, 90.0));
        assert!(!n.in_zone(ESR_NB_EXIT, 1.0));
    }
}
