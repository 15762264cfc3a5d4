//! The reproduction tables, each with a provenance column.

use modexp::published::{sig, LATENCY_128};
use modexp::{adder_kq, modexp_latency, AdderModel, Algorithm, Arch, ModExpConfig};
use multinet::published::{RUN_EPR_NS, RUN_SECONDS, TELEPORT_TOTALS};
use multinet::{
    full_modexp_time, table_cells, DistAdder, TableKind, TimingParams, TopologyKind, TABLE_SIZES,
};
use qecrel::{dqec_cycle_epr, logical_zero_epr_cost, strength_table, Breakpoint, Method};

use crate::output::{Table, Value};
use crate::{CliError, RunConfig};

pub const TABLE_NAMES: [&str; 8] = [
    "latency128",
    "dist-baseline",
    "dist-decomposed",
    "qec-strength",
    "kq",
    "calls",
    "run-time",
    "breakpoints",
];

pub fn run(name: &str, cfg: &RunConfig) -> Result<Table, CliError> {
    match name {
        "list" => {
            let mut t = Table::new(&["table"]);
            for n in TABLE_NAMES {
                t.push(vec![n.into()]);
            }
            Ok(t)
        }
        "latency128" => latency128(),
        "dist-baseline" => dist(TableKind::Monolithic, cfg),
        "dist-decomposed" => dist(TableKind::Decomposed, cfg),
        "qec-strength" => qec_strength(),
        "kq" => kq(cfg),
        "calls" => calls(cfg),
        "run-time" => run_time(cfg),
        "breakpoints" => breakpoints(),
        other => Err(CliError::Usage(format!(
            "unknown table `{other}` (valid names: {})",
            TABLE_NAMES.join(", ")
        ))),
    }
}

fn widths(cfg: &RunConfig, default: &[usize]) -> Vec<usize> {
    cfg.n.clone().unwrap_or_else(|| default.to_vec())
}

/// Latency of each algorithm at 128 bits on both architectures, next to the
/// three-significant-figure reference values.
pub fn latency128() -> Result<Table, CliError> {
    let mut t = Table::new(&[
        "algorithm",
        "ac_ccnot",
        "ac_cnot",
        "ac_not",
        "ac_perf",
        "ntc_two_qubit",
        "ntc_not",
        "ntc_perf",
        "provenance",
        "published_ac_ccnot",
        "published_ac_cnot",
        "published_ac_not",
        "published_ac_perf",
        "published_ntc_two_qubit",
        "published_ntc_not",
        "published_ntc_perf",
        "ac_matches_3sf",
    ]);
    for row in &LATENCY_128 {
        let ac = modexp_latency(&ModExpConfig::preset(row.algorithm, 128, Arch::Ac))?;
        let ntc = modexp_latency(&ModExpConfig::preset(row.algorithm, 128, Arch::Ntc)).ok();
        let (cc, cx, nt) = ac.latency.times();
        let matches = (sig(cc, 3), sig(cx, 3), sig(nt, 3)) == row.ac;
        t.push(vec![
            row.algorithm.name().into(),
            cc.into(),
            cx.into(),
            nt.into(),
            ac.perf.into(),
            ntc.as_ref().map(|r| r.latency.cnot).into(),
            ntc.as_ref().map(|r| r.latency.not).into(),
            ntc.as_ref().map(|r| r.perf).into(),
            "computed".into(),
            row.ac.0.into(),
            row.ac.1.into(),
            row.ac.2.into(),
            row.ac_perf.into(),
            row.ntc.map(|x| x.0).into(),
            row.ntc.map(|x| x.1).into(),
            row.ntc_perf.into(),
            matches.into(),
        ]);
    }
    Ok(t)
}

fn dist(kind: TableKind, cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(&["adder", "n", "method", "topology", "latency", "provenance", "published", "matches"]);
    for n in widths(cfg, &TABLE_SIZES) {
        for c in table_cells(kind, n)? {
            t.push(vec![
                c.adder.name().into(),
                n.into(),
                c.method.name().into(),
                c.topology.name().into(),
                c.cell.value.into(),
                c.cell.provenance.to_string().into(),
                c.cell.published.into(),
                c.cell.matches().into(),
            ]);
        }
    }
    Ok(t)
}

fn qec_strength() -> Result<Table, CliError> {
    let mut t =
        Table::new(&["code", "scale_up", "teleports", "target", "p_t", "printed", "matches", "provenance"]);
    for c in strength_table()? {
        t.push(vec![
            c.stack.to_string().into(),
            c.scale_up.into(),
            c.t.into(),
            c.target.into(),
            c.p_t.into(),
            c.printed.into(),
            c.matches.into(),
            "computed".into(),
        ]);
    }
    Ok(t)
}

fn kq(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(&["scope", "name", "n", "kq", "published", "provenance"]);
    for n in widths(cfg, &[128, 1024]) {
        for (name, model) in [
            ("VBE", AdderModel::Vbe),
            ("CDKM", AdderModel::Cdkm),
            ("QCLA", AdderModel::Qcla),
            ("CSUM", AdderModel::csum_for(n, 4)),
        ] {
            t.push(vec!["adder".into(), name.into(), n.into(), adder_kq(model, n).into(), Value::Empty, "computed".into()]);
        }
        for a in Algorithm::ALL {
            let Ok(r) = modexp_latency(&ModExpConfig::preset(a, n, Arch::Ac)) else { continue };
            let Some(kq) = r.kq else { continue };
            let published = match (a, n) {
                (Algorithm::CVbe, 1024) => Some(modexp::published::KQ_1024_CVBE),
                (Algorithm::E, 1024) => Some(modexp::published::KQ_1024_E),
                _ => None,
            };
            t.push(vec!["modexp".into(), a.name().into(), n.into(), kq.into(), published.into(), "computed".into()]);
        }
    }
    Ok(t)
}

fn calls(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(&[
        "n",
        "adder_calls",
        "published_calls",
        "teleports_low",
        "teleports_high",
        "published_low",
        "published_high",
        "provenance",
    ]);
    for n in widths(cfg, &TABLE_SIZES) {
        let r = full_modexp_time(n, DistAdder::Cdkm, TopologyKind::Line, &TimingParams::default())?;
        let printed = TELEPORT_TOTALS.iter().find(|x| x.0 == n);
        t.push(vec![
            n.into(),
            r.calls.into(),
            r.published_calls.into(),
            r.teleports.0.into(),
            r.teleports.1.into(),
            printed.map(|x| x.1).into(),
            printed.map(|x| x.2).into(),
            "computed".into(),
        ]);
    }
    Ok(t)
}

fn run_time(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(&[
        "n",
        "adder",
        "topology",
        "epr_ns",
        "adder_ns",
        "adder_calls",
        "seconds",
        "published_seconds",
        "provenance",
    ]);
    let eprs = cfg.epr_ns.clone().unwrap_or_else(|| RUN_EPR_NS.to_vec());
    for n in widths(cfg, &TABLE_SIZES) {
        let printed = RUN_SECONDS.iter().find(|x| x.0 == n);
        for (adder, topology) in [(DistAdder::Cdkm, TopologyKind::Line), (DistAdder::Qcla, TopologyKind::TwoFully)] {
            for &epr in &eprs {
                let timing = TimingParams { epr_ns: epr, ..cfg.timing };
                let r = full_modexp_time(n, adder, topology, &timing)?;
                let col = RUN_EPR_NS.iter().position(|&e| e == epr);
                let published = printed.zip(col).map(|(p, i)| if adder == DistAdder::Cdkm { p.1[i] } else { p.2[i] });
                t.push(vec![
                    n.into(),
                    adder.label().into(),
                    topology.name().into(),
                    epr.into(),
                    r.adder_ns.into(),
                    r.calls.into(),
                    r.seconds.into(),
                    published.into(),
                    "computed".into(),
                ]);
            }
        }
    }
    Ok(t)
}

fn breakpoints() -> Result<Table, CliError> {
    let mut t = Table::new(&["breakpoint", "qubits_on_a", "telegate", "teledata", "direction", "provenance"]);
    for bp in Breakpoint::ALL {
        let c = logical_zero_epr_cost(bp);
        t.push(vec![
            bp.to_string().into(),
            bp.qubits_on_a().into(),
            c.telegate.into(),
            c.teledata.into(),
            c.direction.to_string().into(),
            "computed".into(),
        ]);
    }
    for m in [Method::Telegate, Method::Teledata] {
        let d = dqec_cycle_epr(m);
        t.push(vec![
            format!("cycle-{m}").into(),
            Value::Empty,
            if m == Method::Telegate { d.total.into() } else { Value::Empty },
            if m == Method::Teledata { d.total.into() } else { Value::Empty },
            Value::Empty,
            "computed".into(),
        ]);
    }
    Ok(t)
}
