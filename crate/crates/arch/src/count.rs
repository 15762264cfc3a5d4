//! Sequential gate totals.

use revsim::{Circuit, CostTriple};

use crate::schedule::GateClass;

/// Sequential (CCNOT; CNOT; NOT) totals by gate class, with concurrency 1
/// and the circuit width as space. SWAPs and controlled-√X gates count as
/// two-qubit gate times.
pub fn count_gates(c: &Circuit) -> CostTriple {
    let (mut cc, mut cx, mut nt) = (0.0, 0.0, 0.0);
    for g in c.gates() {
        match GateClass::of(g.kind()) {
            GateClass::Three => cc += 1.0,
            GateClass::Two => cx += 1.0,
            GateClass::Not => nt += 1.0,
        }
    }
    CostTriple::new(cc, cx, nt).with_concurrency(1.0).with_space(c.width() as f64)
}
