//! Exhaustive classical simulation: every classical gate is a permutation of
//! basis states, so a circuit is a permutation too.

use crate::circuit::Circuit;
use crate::error::SimError;
use crate::gate::{Gate, GateKind};
use crate::state::BasisState;

/// Limits on how large an exhaustive simulation may get.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum width for a full permutation table (2^width entries).
    pub permutation: usize,
    /// Maximum width for the dense statevector simulator.
    pub statevector: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            permutation: 20,
            statevector: 14,
        }
    }
}

fn first_non_classical(c: &Circuit) -> Result<(), SimError> {
    match c.gates().iter().position(|g| !g.is_classical()) {
        Some(index) => Err(SimError::NonClassicalGate {
            index,
            kind: c.gates()[index].kind(),
        }),
        None => Ok(()),
    }
}

#[inline]
pub(crate) fn apply_classical(g: &Gate, s: &mut BasisState) {
    let q = g.qubits();
    match g.kind() {
        GateKind::Not => s.flip(q[0]),
        GateKind::Cnot => {
            if s.get(q[0]) {
                s.flip(q[1]);
            }
        }
        GateKind::Ccnot => {
            if s.get(q[0]) && s.get(q[1]) {
                s.flip(q[2]);
            }
        }
        GateKind::Swap => swap_bits(s, q[0], q[1]),
        GateKind::Fredkin => {
            if s.get(q[0]) {
                swap_bits(s, q[1], q[2]);
            }
        }
        GateKind::SqrtX | GateKind::SqrtXDag | GateKind::H => unreachable!("checked by caller"),
    }
}

#[inline]
fn swap_bits(s: &mut BasisState, a: usize, b: usize) {
    let (x, y) = (s.get(a), s.get(b));
    s.set(a, y);
    s.set(b, x);
}

/// Same as [`apply_classical`] on a packed integer state.
#[inline]
pub(crate) fn apply_classical_u64(g: &Gate, s: u64) -> u64 {
    let q = g.qubits();
    let bit = |i: usize| s >> q[i] & 1;
    match g.kind() {
        GateKind::Not => s ^ (1 << q[0]),
        GateKind::Cnot => s ^ (bit(0) << q[1]),
        GateKind::Ccnot => s ^ ((bit(0) & bit(1)) << q[2]),
        GateKind::Swap => {
            let d = bit(0) ^ bit(1);
            s ^ (d << q[0]) ^ (d << q[1])
        }
        GateKind::Fredkin => {
            let d = bit(0) & (bit(1) ^ bit(2));
            s ^ (d << q[1]) ^ (d << q[2])
        }
        GateKind::SqrtX | GateKind::SqrtXDag | GateKind::H => unreachable!("checked by caller"),
    }
}

/// Applies each gate's truth table in order.
pub fn run_permutation(c: &Circuit, input: &BasisState) -> Result<BasisState, SimError> {
    first_non_classical(c)?;
    input.check_width(c.width())?;
    let mut s = input.clone();
    for g in c.gates() {
        apply_classical(g, &mut s);
    }
    Ok(s)
}

/// Fast path for circuits of width ≤ 64, with the state packed in an integer.
/// The caller is responsible for the circuit being classical.
pub fn run_packed(c: &Circuit, input: u64) -> Result<u64, SimError> {
    first_non_classical(c)?;
    if c.width() > 64 {
        return Err(SimError::WidthOverBound {
            width: c.width(),
            bound: 64,
        });
    }
    Ok(c.gates().iter().fold(input, |s, g| apply_classical_u64(g, s)))
}

/// The full input → output map of a classical circuit, as a vector indexed by
/// the packed input. Fails if the map is not a bijection (which would mean a
/// simulator bug, since every gate is reversible).
pub fn truth_table(c: &Circuit) -> Result<Vec<u64>, SimError> {
    truth_table_bounded(c, Bounds::default())
}

pub fn truth_table_bounded(c: &Circuit, bounds: Bounds) -> Result<Vec<u64>, SimError> {
    first_non_classical(c)?;
    if c.width() > bounds.permutation {
        return Err(SimError::WidthOverBound {
            width: c.width(),
            bound: bounds.permutation,
        });
    }
    let n = 1u64 << c.width();
    let table: Vec<u64> = (0..n)
        .map(|x| c.gates().iter().fold(x, |s, g| apply_classical_u64(g, s)))
        .collect();
    let mut seen: Vec<Option<u64>> = vec![None; table.len()];
    for (x, &y) in table.iter().enumerate() {
        if let Some(prev) = seen[y as usize] {
            return Err(SimError::NotBijection { a: prev, b: x as u64 });
        }
        seen[y as usize] = Some(x as u64);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(width: usize, gates: Vec<Gate>) -> Circuit {
        Circuit::from_gates(width, gates).unwrap()
    }

    #[test]
    fn cnot_truth_table() {
        // control A = qubit 0, target B = qubit 1; (A,B) = (1,0) -> (1,1)
        let circ = c(2, vec![Gate::cnot(0, 1)]);
        let out = run_permutation(&circ, &BasisState::from_bits(&[true, false])).unwrap();
        assert_eq!(out, BasisState::from_bits(&[true, true]));
        assert_eq!(truth_table(&circ).unwrap(), vec![0, 3, 2, 1]);
    }

    #[test]
    fn toffoli_and_fredkin_rows() {
        let t = c(3, vec![Gate::ccnot(0, 1, 2)]);
        let out = run_permutation(&t, &BasisState::from_bits(&[true, true, false])).unwrap();
        assert_eq!(out, BasisState::from_bits(&[true, true, true]));

        // Fredkin with control first: (1,0,1) -> (1,1,0)
        let f = c(3, vec![Gate::fredkin(0, 1, 2)]);
        let out = run_permutation(&f, &BasisState::from_bits(&[true, false, true])).unwrap();
        assert_eq!(out, BasisState::from_bits(&[true, true, false]));
    }

    #[test]
    fn empty_circuit_is_identity() {
        let e = Circuit::new(4);
        let s = BasisState::from_u64(4, 0b1011);
        assert_eq!(run_permutation(&e, &s).unwrap(), s);
    }

    #[test]
    fn three_cnots_make_a_swap() {
        let three = c(2, vec![Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)]);
        let swap = c(2, vec![Gate::swap(0, 1)]);
        assert_eq!(truth_table(&three).unwrap(), truth_table(&swap).unwrap());
        assert_eq!(truth_table(&three).unwrap(), vec![0, 2, 1, 3]);
    }

    #[test]
    fn single_not_table() {
        assert_eq!(truth_table(&c(1, vec![Gate::not(0)])).unwrap(), vec![1, 0]);
    }

    #[test]
    fn toffoli_table_swaps_only_top_rows() {
        let t = truth_table(&c(3, vec![Gate::ccnot(0, 1, 2)])).unwrap();
        // qubit 2 is the high bit: 110 (binary, q2 q1 q0) is index 3 -> 7
        assert_eq!(t, vec![0, 1, 2, 7, 4, 5, 6, 3]);
    }

    #[test]
    fn rejects_non_classical_and_wide() {
        let q = c(2, vec![Gate::sqrt_x(0, 1)]);
        assert!(matches!(
            run_permutation(&q, &BasisState::zeros(2)),
            Err(SimError::NonClassicalGate { index: 0, .. })
        ));
        assert!(truth_table(&q).is_err());
        let wide = Circuit::new(21);
        assert!(matches!(
            truth_table(&wide),
            Err(SimError::WidthOverBound { width: 21, bound: 20 })
        ));
        let b = Bounds {
            permutation: 22,
            ..Bounds::default()
        };
        assert_eq!(truth_table_bounded(&wide, b).unwrap().len(), 1 << 21);
    }

    #[test]
    fn wrong_state_width_is_an_error() {
        let circ = c(3, vec![Gate::not(0)]);
        assert!(run_permutation(&circ, &BasisState::zeros(2)).is_err());
    }
}
