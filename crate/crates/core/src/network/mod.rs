//! Road network model: nodes, multi-lane links, lane connections, routes and
//! the measurement zone, plus the occupancy queries the engine needs (leader
//! search across link boundaries, lag search, roundabout yield rule).

mod br;
mod occupancy;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{ConfigError, SimError};

pub use br::{
    build_br_network, build_br_network_with, links as br_links, nodes as br_nodes, NetworkParams,
    ARC_BEARINGS_DEG, ROUNDABOUT_DIAMETER,
};
pub use occupancy::{
    lag_of, leader_beyond, leader_of, roundabout_entry_check, same_lane_leader, EntryDecision,
    LagVehicle, Leader, Occupancy, OccupantView,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u16);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkId(pub u16);

impl LinkId {
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

/// A lane on a specific link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaneRef {
    pub link: LinkId,
    /// 0 is the rightmost lane.
    pub lane: u8,
}

impl LaneRef {
    pub const fn new(link: LinkId, lane: u8) -> Self {
        LaneRef { link, lane }
    }
}

/// One of the six observed routes through the fork.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RouteId(u8);

impl RouteId {
    pub const ALL: [RouteId; 6] = [
        RouteId(1),
        RouteId(2),
        RouteId(3),
        RouteId(4),
        RouteId(5),
        RouteId(6),
    ];

    pub fn new(id: u8) -> Result<Self, SimError> {
        if (1..=6).contains(&id) {
            Ok(RouteId(id))
        } else {
            Err(SimError::UnknownRoute(id))
        }
    }

    pub const fn get(self) -> u8 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for RouteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Infrastructure layouts: the current fork and three widening proposals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum InfraVariant {
    /// Current layout, every approach and exit has two lanes.
    #[default]
    Id0,
    /// Both GPSA approaches toward the roundabout widened to three lanes.
    Id1,
    /// GPSA eastbound widened to three lanes from PNR through to DOST.
    Id2,
    /// ESR southbound widened to three lanes, continuing on GPSA westbound to PNR.
    Id3,
}

impl InfraVariant {
    pub const ALL: [InfraVariant; 4] = [
        InfraVariant::Id0,
        InfraVariant::Id1,
        InfraVariant::Id2,
        InfraVariant::Id3,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            InfraVariant::Id0 => "ID0",
            InfraVariant::Id1 => "ID1",
            InfraVariant::Id2 => "ID2",
            InfraVariant::Id3 => "ID3",
        }
    }
}

impl fmt::Display for InfraVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InfraVariant {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InfraVariant::ALL
            .iter()
            .copied()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ConfigError::UnknownVariant(String::from(s)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// Where vehicles spawn and despawn.
    Boundary,
    /// A connection point on the roundabout.
    Junction,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub id: NodeId,
    pub name: &'static str,
    pub kind: NodeKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkKind {
    Approach,
    Exit,
    RoundaboutArc,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lane {
    pub id: LaneRef,
    pub index: u8,
    pub width: f64,
}

/// Lane-level connectivity from the end of one link to the start of another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connection {
    pub from_lane: u8,
    pub to_link: LinkId,
    pub to_lane: u8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Link {
    pub id: LinkId,
    pub name: &'static str,
    pub from: NodeId,
    pub to: NodeId,
    pub length: f64,
    pub lanes: Vec<Lane>,
    pub legal_speed: f64,
    pub kind: LinkKind,
    pub connections: Vec<Connection>,
}

impl Link {
    pub fn lane_count(&self) -> u8 {
        self.lanes.len() as u8
    }

    /// Target lane on `to` when leaving this link from `lane`, if connected.
    pub fn connection(&self, lane: u8, to: LinkId) -> Option<u8> {
        self.connections
            .iter()
            .find(|c| c.from_lane == lane && c.to_link == to)
            .map(|c| c.to_lane)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub id: RouteId,
    pub links: Vec<LinkId>,
    pub entry: NodeId,
    pub exit: NodeId,
}

/// Region over which delay, speed and travel time are accumulated: every
/// roundabout arc plus the final stretch of each approach.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementZone {
    pub approach_tail: f64,
}

impl Default for MeasurementZone {
    fn default() -> Self {
        MeasurementZone { approach_tail: 50.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RoadNetwork {
    pub variant: InfraVariant,
    pub nodes: Vec<Node>,
    pub links: Vec<Link>,
    pub routes: Vec<Route>,
    pub zone: MeasurementZone,
    /// Roundabout arcs in circulation order.
    pub arc_cycle: Vec<LinkId>,
    /// Upstream lanes feeding each lane, indexed like [`RoadNetwork::lane_slot`].
    feeders: Vec<Vec<LaneRef>>,
    lane_offsets: Vec<usize>,
}

impl RoadNetwork {
    /// Assembles a network and checks its structural invariants.
    pub fn new(
        variant: InfraVariant,
        nodes: Vec<Node>,
        links: Vec<Link>,
        routes: Vec<Route>,
        zone: MeasurementZone,
    ) -> Result<Self, ConfigError> {
        let mut lane_offsets = Vec::with_capacity(links.len() + 1);
        let mut total = 0;
        for (i, l) in links.iter().enumerate() {
            if l.id.index() != i {
                return Err(ConfigError::invariant("link ids must match their position"));
            }
            if !(l.length > 0.0 && l.length.is_finite()) {
                return Err(ConfigError::invariant(alloc::format!(
                    "link {} must have positive length",
                    l.name
                )));
            }
            if l.lanes.is_empty() {
                return Err(ConfigError::invariant(alloc::format!(
                    "link {} must have at least one lane",
                    l.name
                )));
            }
            if l.lanes.iter().any(|lane| !(lane.width > 0.0)) {
                return Err(ConfigError::invariant("lane width must be > 0"));
            }
            if !(l.legal_speed > 0.0 && l.legal_speed.is_finite()) {
                return Err(ConfigError::invariant("legal speed must be > 0"));
            }
            lane_offsets.push(total);
            total += l.lanes.len();
        }
        lane_offsets.push(total);

        let mut feeders = alloc::vec![Vec::new(); total];
        for l in &links {
            for c in &l.connections {
                let Some(to) = links.get(c.to_link.index()) else {
                    return Err(ConfigError::invariant("connection to unknown link"));
                };
                if c.from_lane >= l.lane_count() || c.to_lane >= to.lane_count() {
                    return Err(ConfigError::invariant("connection to unknown lane"));
                }
                if l.to != to.from {
                    return Err(ConfigError::invariant("connected links must share a node"));
                }
                feeders[lane_offsets[c.to_link.index()] + c.to_lane as usize]
                    .push(LaneRef::new(l.id, c.from_lane));
            }
        }

        let arc_cycle = order_arc_cycle(&links)?;

        for r in &routes {
            let Some(first) = r.links.first() else {
                return Err(ConfigError::invariant("route must contain links"));
            };
            if links[first.index()].from != r.entry || links[r.links.last().unwrap().index()].to != r.exit {
                return Err(ConfigError::invariant(alloc::format!(
                    "route {} must start at its entry and end at its exit",
                    r.id
                )));
            }
            for w in r.links.windows(2) {
                if links[w[0].index()].to != links[w[1].index()].from {
                    return Err(ConfigError::invariant(alloc::format!(
                        "route {}: consecutive links must share a node",
                        r.id
                    )));
                }
            }
            if !r
                .links
                .iter()
                .any(|l| links[l.index()].kind == LinkKind::RoundaboutArc)
            {
                return Err(ConfigError::invariant(alloc::format!(
                    "route {} must traverse the roundabout",
                    r.id
                )));
            }
        }
        if !(zone.approach_tail >= 0.0) || arc_cycle.is_empty() {
            return Err(ConfigError::invariant("measurement zone must be nonempty"));
        }

        Ok(RoadNetwork {
            variant,
            nodes,
            links,
            routes,
            zone,
            arc_cycle,
            feeders,
            lane_offsets,
        })
    }

    pub fn link(&self, id: LinkId) -> &Link {
        &self.links[id.index()]
    }

    pub fn route(&self, id: RouteId) -> &Route {
        &self.routes[id.index()]
    }

    /// Dense index of a lane across the whole network.
    pub fn lane_slot(&self, lane: LaneRef) -> usize {
        self.lane_offsets[lane.link.index()] + lane.lane as usize
    }

    pub fn lane_slot_count(&self) -> usize {
        *self.lane_offsets.last().unwrap_or(&0)
    }

    /// Lanes on other links that flow into `lane`.
    pub fn feeders(&self, lane: LaneRef) -> &[LaneRef] {
        &self.feeders[self.lane_slot(lane)]
    }

    /// Whether a position on a link lies inside the measurement zone.
    pub fn in_zone(&self, link: LinkId, x: f64) -> bool {
        let l = self.link(link);
        match l.kind {
            LinkKind::RoundaboutArc => true,
            LinkKind::Approach => x >= l.length - self.zone.approach_tail,
            LinkKind::Exit => false,
        }
    }

    pub fn arc_cycle_length(&self) -> f64 {
        self.arc_cycle.iter().map(|l| self.link(*l).length).sum()
    }

    /// Link following position `pos` on a route, if any.
    pub fn next_on_route(&self, route: RouteId, pos: usize) -> Option<LinkId> {
        self.route(route).links.get(pos + 1).copied()
    }
}

/// The ordered link sequence of a route.
pub fn route_links(network: &RoadNetwork, route_id: u8) -> Result<&[LinkId], SimError> {
    let id = RouteId::new(route_id)?;
    Ok(&network.route(id).links)
}

fn order_arc_cycle(links: &[Link]) -> Result<Vec<LinkId>, ConfigError> {
    let arcs: Vec<&Link> = links
        .iter()
        .filter(|l| l.kind == LinkKind::RoundaboutArc)
        .collect();
    let Some(first) = arcs.first() else {
        return Ok(Vec::new());
    };
    let mut cycle = alloc::vec![first.id];
    let mut at = first.to;
    while at != first.from {
        let next: Vec<&&Link> = arcs.iter().filter(|l| l.from == at).collect();
        if next.len() != 1 || cycle.len() > arcs.len() {
            return Err(ConfigError::invariant(
                "roundabout arcs must form a single directed cycle",
            ));
        }
        cycle.push(next[0].id);
        at = next[0].to;
    }
    if cycle.len() != arcs.len() {
        return Err(ConfigError::invariant(
            "roundabout arcs must form a single directed cycle",
        ));
    }
    Ok(cycle)
}
