//! Discrete time-step traffic microsimulation of a three-road fork joined by an
//! unsignalized single-lane roundabout.
//!
//! The crate is `no_std` (it only needs `alloc`) and contains everything that is
//! pure computation:
//!
//! - [`types`]: vehicle classes, kinematic state and the space-headway helper.
//! - [`carfollow`]: the three-state car-following kernel (free driving, asymmetric
//!   GHR following, emergency deceleration).
//! - [`lanechange`]: rule-based lateral movement with gap acceptance.
//! - [`network`]: link/lane graph, the roundabout network builder with its
//!   widening variants, routes, leader search and the roundabout yield rule.
//! - [`scenario`]: run parameters and their invariants.
//! - [`demand`]: Poisson arrivals with the observed route and class mix.
//! - [`engine`]: the synchronous two-phase step loop and replication runner.
//! - [`metrics`]: per-vehicle delay, travel time and speed, plus aggregates.
//! - [`stats`]: RCBD ANOVA, F p-values, Duncan's multiple range test and OLS.
//!
//! File formats, CSV output and the command line live in the `forksim` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod carfollow;
pub mod demand;
pub mod engine;
pub mod error;
pub mod lanechange;
pub mod metrics;
pub mod network;
pub mod scenario;
pub mod stats;
pub mod types;

pub use error::{ConfigError, SimError};
