//! A single timed configuration with its breakdown and full-run estimate.

use multinet::{full_modexp_time, latency_timed, CommMethod, DistAdder, TimingParams, TopologyKind};

use crate::output::{Table, Value};
use crate::{CliError, RunConfig};

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    let adders = cfg.adders.clone().unwrap_or_else(|| vec![DistAdder::Cdkm]);
    let topologies = cfg.topologies.clone().unwrap_or_else(|| vec![TopologyKind::Line]);
    let widths = cfg.n.clone().unwrap_or_else(|| vec![1024]);
    let eprs = cfg.epr_ns.clone().unwrap_or_else(|| vec![cfg.timing.epr_ns]);
    let mut t = Table::new(&[
        "adder",
        "method",
        "topology",
        "n",
        "epr_ns",
        "comm_ns",
        "local_ns",
        "latency_ns",
        "fastest",
        "adder_calls",
        "run_seconds",
    ]);
    for &adder in &adders {
        for &topology in &topologies {
            for &n in &widths {
                for &epr in &eprs {
                    let timing = TimingParams { epr_ns: epr, ..cfg.timing };
                    let r = latency_timed(adder, topology, n, cfg.method, &timing)?;
                    // the full-run estimate is built on teledata additions
                    let run = if cfg.method == CommMethod::Teledata {
                        Some(full_modexp_time(n, adder, topology, &timing)?)
                    } else {
                        None
                    };
                    t.push(vec![
                        adder.name().into(),
                        cfg.method.name().into(),
                        topology.name().into(),
                        n.into(),
                        epr.into(),
                        r.comm_ns.into(),
                        r.local_ns.into(),
                        r.ns.into(),
                        r.fastest.label().into(),
                        run.map(|x| x.calls).into(),
                        run.map_or(Value::Empty, |x| x.seconds.into()),
                    ]);
                }
            }
        }
    }
    Ok(t)
}
