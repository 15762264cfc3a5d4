//! Exhaustive adder checks and gate counts against the closed forms.

use adders::formulas::{cdkm_counts, qcla_counts, select_counts, vbe_counts, Counts};
use adders::{generate, verify_exhaustive, AdderCircuit, AdderError, AdderKind, SelectParams};
use revsim::{Circuit, GateKind};

use crate::output::{Table, Value};
use crate::{CliError, Outcome, RunConfig};

/// Widest operands checked exhaustively: 2^12 input pairs per circuit.
pub const N_MAX_BOUND: usize = 6;

/// Closed-form (CCNOT, CNOT, NOT) totals of the circuit `generate` builds.
pub fn closed_form_counts(kind: AdderKind, n: usize) -> Result<Counts, AdderError> {
    Ok(match kind {
        AdderKind::Vbe => vbe_counts(n),
        AdderKind::Cdkm => cdkm_counts(n),
        AdderKind::Qcla => {
            if n < 2 || !n.is_power_of_two() {
                return Err(AdderError::NotPowerOfTwo(n));
            }
            qcla_counts(n)
        }
        AdderKind::Csla => select_counts(&SelectParams::default_csla(n)?, kind),
        AdderKind::Csum => select_counts(&SelectParams::default_csum(n)?, kind),
    })
}

pub fn gate_counts(c: &Circuit) -> Counts {
    (c.count(GateKind::Ccnot), c.count(GateKind::Cnot), c.count(GateKind::Not))
}

fn header() -> Table {
    Table::new(&["kind", "n", "pairs", "result", "ccnot", "cnot", "not", "formula_ccnot", "formula_cnot", "formula_not", "counts"])
}

/// Checks one circuit; returns the row and the failure, if any.
fn check(ac: &AdderCircuit) -> Result<(Vec<Value>, Option<String>), CliError> {
    let got = gate_counts(&ac.circuit);
    let want = closed_form_counts(ac.kind, ac.n)?;
    let mut failure = None;
    let result = match verify_exhaustive(ac) {
        Ok(()) => "pass".to_string(),
        Err(m) => {
            failure = Some(format!("{} n={}: first failing input {m}", ac.kind, ac.n));
            format!("FAIL {m}")
        }
    };
    let counts = if got == want { "match" } else { "differ" };
    if got != want && failure.is_none() {
        failure = Some(format!("{} n={}: gate counts {got:?} differ from the closed form {want:?}", ac.kind, ac.n));
    }
    let row = vec![
        ac.kind.name().into(),
        ac.n.into(),
        (1u64 << (2 * ac.n)).into(),
        result.into(),
        got.0.into(),
        got.1.into(),
        got.2.into(),
        want.0.into(),
        want.1.into(),
        want.2.into(),
        counts.into(),
    ];
    Ok((row, failure))
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if cfg.n_max > N_MAX_BOUND {
        return Err(CliError::Usage(format!(
            "n_max = {} is beyond the exhaustive bound of {N_MAX_BOUND} bits",
            cfg.n_max
        )));
    }
    let mut table = header();
    let mut first_failure = None;
    let mut record = |(row, failure): (Vec<Value>, Option<String>)| {
        table.push(row);
        if first_failure.is_none() {
            first_failure = failure;
        }
    };

    if let Some(path) = &cfg.circuit {
        let kind = cfg.kind.ok_or_else(|| CliError::Usage("--circuit needs --kind".into()))?;
        let n = match cfg.n.as_deref() {
            Some([n]) => *n,
            _ => return Err(CliError::Usage("--circuit needs a single --n".into())),
        };
        if n > N_MAX_BOUND {
            return Err(CliError::Usage(format!("n = {n} is beyond the exhaustive bound of {N_MAX_BOUND} bits")));
        }
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
        let circuit = Circuit::from_text(&text)?;
        let mut ac = generate(kind, n)?;
        if circuit.width() != ac.width() {
            return Err(CliError::Usage(format!(
                "circuit has {} qubits but a {n}-bit {kind} uses {}",
                circuit.width(),
                ac.width()
            )));
        }
        ac.circuit = circuit;
        record(check(&ac)?);
    } else {
        for kind in AdderKind::ALL {
            for n in 1..=cfg.n_max {
                match generate(kind, n) {
                    Ok(ac) => record(check(&ac)?),
                    // widths this adder does not come in
                    Err(AdderError::TooNarrow { .. } | AdderError::NotPowerOfTwo(_) | AdderError::Groups { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(Outcome { table, failure: first_failure })
}
