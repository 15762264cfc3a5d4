//! Timed latency over a grid of widths and EPR creation times.

use multinet::{timed_grid, DistAdder, TimingParams, TopologyKind};

use crate::output::Table;
use crate::{CliError, RunConfig};

pub const DEFAULT_WIDTHS: [usize; 7] = [16, 32, 64, 128, 256, 512, 1024];
pub const DEFAULT_EPR_NS: [f64; 3] = [10.0, 160.0, 1280.0];

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    let widths = cfg.n.clone().unwrap_or_else(|| DEFAULT_WIDTHS.to_vec());
    let eprs = cfg.epr_ns.clone().unwrap_or_else(|| DEFAULT_EPR_NS.to_vec());
    let adders = cfg.adders.clone().unwrap_or_else(|| DistAdder::ALL.to_vec());
    let topologies = cfg.topologies.clone().unwrap_or_else(|| TopologyKind::ALL.to_vec());
    let mut t = Table::new(&["adder", "method", "topology", "n", "epr_ns", "latency_ns", "fastest"]);
    for &epr in &eprs {
        let timing = TimingParams { epr_ns: epr, ..cfg.timing };
        for &n in &widths {
            for (adder, topology, r) in timed_grid(n, cfg.method, &timing)? {
                if !adders.contains(&adder) || !topologies.contains(&topology) {
                    continue;
                }
                t.push(vec![
                    adder.name().into(),
                    cfg.method.name().into(),
                    topology.name().into(),
                    n.into(),
                    epr.into(),
                    r.ns.into(),
                    r.fastest.label().into(),
                ]);
            }
        }
    }
    if t.rows.is_empty() {
        return Err(CliError::Usage("the sweep grid is empty for these adders, topologies and widths".into()));
    }
    Ok(t)
}
