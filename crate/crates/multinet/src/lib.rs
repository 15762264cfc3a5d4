//! A quantum multicomputer: adders split across small nodes joined by
//! teleportation links.
//!
//! Three latency tiers are kept apart:
//!
//! * [`latency_baseline`]: whole teleportations as the unit of time, with
//!   EPR creation done on demand.
//! * [`latency_decomposed`]: EPR creations as the unit, created ahead of time
//!   whenever the links allow; local work is free.
//! * [`latency_timed`]: nanoseconds from a discrete-event run with separate
//!   EPR, classical and gate times.
//!
//! [`full_modexp_time`] scales the timed adder up to a complete modular
//! exponentiation.

mod comm;
mod modexp_time;
mod params;
pub mod program;
pub mod published;
pub mod sim;
mod tables;
mod timed;
mod topology;

pub use comm::dist_adder_comm;
pub use modexp_time::{adder_calls, full_modexp_time, teleport_range, ModExpTime};
pub use params::{node_qubits, CommMethod, DistAdder, NodeSpec, TimingParams};
pub use sim::{load, simulate, EprPolicy, Schedule};
pub use tables::{
    latency_baseline, latency_decomposed, table_cells, CellReport, Provenance, TableCell, TableKind, TABLE_SIZES,
};
pub use timed::{fastest_adder, latency_timed, latency_timed_with, timed_grid, TimedLatency};
pub use topology::{TopoMetrics, Topology, TopologyKind};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MultinetError {
    #[error("unknown topology `{0}`")]
    UnknownTopology(String),
    #[error("unknown adder `{0}`")]
    UnknownAdder(String),
    #[error("unknown communication method `{0}`")]
    UnknownMethod(String),
    #[error("a network needs at least two nodes, got {0}")]
    TooFewNodes(usize),
    #[error("{adder} is not run on a {topology} network")]
    Unsupported { adder: DistAdder, topology: TopologyKind },
    #[error("no {method} estimate for the {topology} network")]
    NotAvailable { method: CommMethod, topology: TopologyKind },
    #[error("width {n} is not valid for {adder}")]
    Width { adder: DistAdder, n: usize },
    #[error("timing parameter `{name}` must be positive and finite, got {value}")]
    Timing { name: &'static str, value: f64 },
    #[error("node capacity must be at least one bit slice")]
    Capacity,
    #[error(transparent)]
    ModExp(#[from] modexp::ModExpError),
}
