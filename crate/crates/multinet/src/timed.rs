//! Nanosecond latencies from the event model.
//!
//! The ripple adders keep their transfers in a fixed order, so every EPR
//! pair is created as early as its link allows and the teleports wait only
//! for data and the classical message. The lookahead moves operands between
//! arbitrary nodes as the tree unfolds, so its pairs are made on demand,
//! layer by layer: one layer per Toffoli step of the tree (4k+3) plus the
//! operand load and the final sum, each waiting for two incoming operands
//! per target. Return trips overlap the next layer and are not on the
//! critical path.
//!
//! Local gates are added as the adder's critical path on a fully concurrent
//! node array; communication and local work are not overlapped.

use modexp::Arch;

use crate::comm::three_node_toffolis;
use crate::program::{self, Layer, Program};
use crate::sim::{simulate, EprPolicy};
use crate::{CommMethod, DistAdder, MultinetError, NodeSpec, TimingParams, TopologyKind};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimedLatency {
    pub ns: f64,
    pub comm_ns: f64,
    pub local_ns: f64,
    /// The fastest adder at this width and timing, over every topology it
    /// runs on.
    pub fastest: DistAdder,
}

fn lookahead_layers(n: usize) -> usize {
    4 * n.trailing_zeros() as usize + 5
}

fn timed_program(
    adder: DistAdder,
    topology: TopologyKind,
    n: usize,
    method: CommMethod,
    node: NodeSpec,
) -> Result<(Program, EprPolicy), MultinetError> {
    let m = node.nodes(n);
    let t = node.transceivers;
    let p = match (adder, method) {
        (_, CommMethod::Baseline) => return Err(MultinetError::NotAvailable { method, topology }),
        (DistAdder::Vbe, CommMethod::Teledata) => program::vbe_teledata(topology, m, t)?,
        (DistAdder::Vbe, CommMethod::Telegate) => program::vbe_telegate(topology, m, t)?,
        (DistAdder::Cdkm, CommMethod::Teledata) => program::cdkm_teledata(topology, m, t)?,
        (DistAdder::Cdkm, CommMethod::Telegate) => program::cdkm_telegate(topology, m, t)?,
        (DistAdder::Qcla, _) => {
            let layers = lookahead_layers(n);
            let count = match topology {
                // every remote Toffoli of the tree shares the medium
                TopologyKind::Bus | TopologyKind::TwoBus => {
                    let k = n.trailing_zeros() as u64;
                    (2 * three_node_toffolis(n as u64, k)).div_ceil(layers as u64) as usize
                }
                // each slice on the target node takes two operands
                _ => 2 * node.bits,
            };
            let p = program::layered(topology, m, t, &vec![Layer::Incoming { count }; layers])?;
            return Ok((p, EprPolicy::OnDemand));
        }
    };
    Ok((p, EprPolicy::Prefetch))
}

fn local_ns(adder: DistAdder, n: usize, timing: &TimingParams) -> Result<f64, MultinetError> {
    let (cc, cx, nt) = modexp::adder_latency(adder.model(), n, Arch::Ac)?.times();
    Ok(cc * timing.ccnot_ns + cx * timing.cnot_ns + nt * timing.not_ns)
}

fn timed_ns(
    adder: DistAdder,
    topology: TopologyKind,
    n: usize,
    method: CommMethod,
    timing: &TimingParams,
    node: NodeSpec,
) -> Result<(f64, f64), MultinetError> {
    adder.check(topology, n)?;
    timing.validate()?;
    let (p, policy) = timed_program(adder, topology, n, method, node)?;
    let comm = simulate(&p, timing.epr_ns, timing.classical_ns, policy).makespan;
    Ok((comm, local_ns(adder, n, timing)?))
}

/// Timed latency of every supported (adder, topology) pair at width `n`,
/// one bit slice per node. Each entry carries the overall fastest adder.
pub fn timed_grid(
    n: usize,
    method: CommMethod,
    timing: &TimingParams,
) -> Result<Vec<(DistAdder, TopologyKind, TimedLatency)>, MultinetError> {
    let mut grid = Vec::new();
    for adder in DistAdder::ALL {
        for topology in TopologyKind::ALL {
            if adder.check(topology, n).is_err() {
                continue;
            }
            let (comm_ns, local_ns) = timed_ns(adder, topology, n, method, timing, NodeSpec::slice(topology))?;
            let t = TimedLatency { ns: comm_ns + local_ns, comm_ns, local_ns, fastest: adder };
            grid.push((adder, topology, t));
        }
    }
    let best = grid
        .iter()
        .fold(None, |b: Option<(DistAdder, f64)>, (a, _, t)| match b {
            Some((_, ns)) if ns <= t.ns => b,
            _ => Some((*a, t.ns)),
        })
        .ok_or(MultinetError::Width { adder: DistAdder::Vbe, n })?;
    for (_, _, t) in &mut grid {
        t.fastest = best.0;
    }
    Ok(grid)
}

/// The adder with the lowest timed latency at width `n`, each adder on its
/// best topology, with that topology and latency.
pub fn fastest_adder(
    n: usize,
    method: CommMethod,
    timing: &TimingParams,
) -> Result<(DistAdder, TopologyKind, f64), MultinetError> {
    let grid = timed_grid(n, method, timing)?;
    let (_, topology, t) = grid
        .iter()
        .filter(|(a, _, t)| *a == t.fastest)
        .min_by(|x, y| x.2.ns.total_cmp(&y.2.ns))
        .expect("the fastest adder is in the grid");
    Ok((t.fastest, *topology, t.ns))
}

/// Timed latency with one bit slice per node.
pub fn latency_timed(
    adder: DistAdder,
    topology: TopologyKind,
    n: usize,
    method: CommMethod,
    timing: &TimingParams,
) -> Result<TimedLatency, MultinetError> {
    latency_timed_with(adder, topology, n, method, timing, NodeSpec::slice(topology))
}

/// Timed latency with an explicit node shape.
pub fn latency_timed_with(
    adder: DistAdder,
    topology: TopologyKind,
    n: usize,
    method: CommMethod,
    timing: &TimingParams,
    node: NodeSpec,
) -> Result<TimedLatency, MultinetError> {
    let (comm_ns, local_ns) = timed_ns(adder, topology, n, method, timing, node)?;
    let fastest = fastest_adder(n, method, timing)?.0;
    Ok(TimedLatency { ns: comm_ns + local_ns, comm_ns, local_ns, fastest })
}
