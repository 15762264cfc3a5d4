//! Gate decompositions into the NTC gate set.

use revsim::Gate;

/// Toffoli with controls `near` and `far` and target `t` as five two-qubit
/// gates. With V = √X the target picks up V^near · V†^(near⊕far) · V^far,
/// which is X exactly when both controls are set and the identity otherwise.
///
/// When the three qubits sit on consecutive positions with `near` adjacent
/// to `t`, every gate but the last is nearest-neighbour.
pub fn decompose_ccnot_ntc(near: usize, far: usize, t: usize) -> [Gate; 5] {
    [
        Gate::sqrt_x(near, t),
        Gate::cnot(far, near),
        Gate::sqrt_x_dag(near, t),
        Gate::cnot(far, near),
        Gate::sqrt_x(far, t),
    ]
}

/// Controlled swap as CNOT, Toffoli, CNOT.
pub fn decompose_fredkin(c: usize, x: usize, y: usize) -> [Gate; 3] {
    [Gate::cnot(y, x), Gate::ccnot(c, x, y), Gate::cnot(y, x)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsim::{equivalent, run_statevector, BasisState, Bounds, Circuit, Equivalence};

    #[test]
    fn matches_toffoli_on_every_basis_state() {
        let seq = Circuit::from_gates(3, decompose_ccnot_ntc(1, 0, 2).to_vec()).unwrap();
        let tof = Circuit::from_gates(3, vec![Gate::ccnot(0, 1, 2)]).unwrap();
        assert!(equivalent(&seq, &tof, Equivalence::Unitary, Bounds::default()).unwrap());
    }

    #[test]
    fn maps_110_to_111() {
        let seq = Circuit::from_gates(3, decompose_ccnot_ntc(1, 0, 2).to_vec()).unwrap();
        let out = run_statevector(&seq, &BasisState::from_u64(3, 0b011)).unwrap();
        assert!((out.amplitude(0b111).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fredkin_identity() {
        let seq = Circuit::from_gates(3, decompose_fredkin(2, 0, 1).to_vec()).unwrap();
        let f = Circuit::from_gates(3, vec![Gate::fredkin(2, 0, 1)]).unwrap();
        assert!(equivalent(&seq, &f, Equivalence::Auto, Bounds::default()).unwrap());
    }
}
