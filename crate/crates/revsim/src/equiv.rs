//! Circuit equivalence checks.

use num_complex::Complex64;

use crate::circuit::Circuit;
use crate::error::SimError;
use crate::perm::{truth_table_bounded, Bounds};
use crate::state::BasisState;
use crate::statevec::run_statevector_bounded;

/// How strictly two circuits must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Equivalence {
    /// Truth tables when both circuits are classical, otherwise the full
    /// action on every basis input up to one global phase.
    #[default]
    Auto,
    /// Full unitary action, up to a single global phase.
    Unitary,
    /// Every basis input must land on the same basis output in both circuits;
    /// the phase of each output is ignored. This is how a decomposed circuit
    /// is compared against the classical circuit it implements.
    PermutationUpToPhase,
}

const AMP_TOL: f64 = 1e-9;

pub fn assert_equiv(c1: &Circuit, c2: &Circuit) -> Result<bool, SimError> {
    equivalent(c1, c2, Equivalence::Auto, Bounds::default())
}

pub fn equivalent(
    c1: &Circuit,
    c2: &Circuit,
    mode: Equivalence,
    bounds: Bounds,
) -> Result<bool, SimError> {
    if c1.width() != c2.width() {
        return Err(SimError::WidthMismatch(c1.width(), c2.width()));
    }
    match mode {
        Equivalence::Auto if c1.is_classical() && c2.is_classical() => {
            Ok(truth_table_bounded(c1, bounds)? == truth_table_bounded(c2, bounds)?)
        }
        Equivalence::Auto | Equivalence::Unitary => unitary_equal(c1, c2, bounds),
        Equivalence::PermutationUpToPhase => permutation_up_to_phase(c1, c2, bounds),
    }
}

fn unitary_equal(c1: &Circuit, c2: &Circuit, bounds: Bounds) -> Result<bool, SimError> {
    let w = c1.width();
    let mut phase: Option<Complex64> = None;
    for x in 0..(1u64 << w.min(bounds.statevector)) {
        let input = BasisState::from_u64(w, x);
        let a = run_statevector_bounded(c1, &input, bounds)?;
        let b = run_statevector_bounded(c2, &input, bounds)?;
        let ph = match phase {
            Some(p) => p,
            None => {
                // fix the global phase on the largest amplitude of the first column
                let (i, _) = a
                    .amplitudes()
                    .iter()
                    .enumerate()
                    .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
                    .expect("nonempty state");
                let (ai, bi) = (a.amplitudes()[i], b.amplitudes()[i]);
                if bi.norm() < AMP_TOL {
                    return Ok(false);
                }
                let p = ai / bi;
                phase = Some(p);
                p
            }
        };
        let same = a
            .amplitudes()
            .iter()
            .zip(b.amplitudes())
            .all(|(&x, &y)| (x - ph * y).norm() <= AMP_TOL);
        if !same {
            return Ok(false);
        }
    }
    Ok(true)
}

fn permutation_up_to_phase(c1: &Circuit, c2: &Circuit, bounds: Bounds) -> Result<bool, SimError> {
    let w = c1.width();
    for x in 0..(1u64 << w.min(bounds.statevector)) {
        let input = BasisState::from_u64(w, x);
        let a = run_statevector_bounded(c1, &input, bounds)?.support(AMP_TOL);
        let b = run_statevector_bounded(c2, &input, bounds)?.support(AMP_TOL);
        if a.len() != 1 || b.len() != 1 {
            return Ok(false);
        }
        let (ia, aa) = a.iter().next().expect("one entry");
        let (ib, ab) = b.iter().next().expect("one entry");
        if ia != ib || (aa.norm() - 1.0).abs() > AMP_TOL || (ab.norm() - 1.0).abs() > AMP_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::Gate;

    fn c(width: usize, gates: Vec<Gate>) -> Circuit {
        Circuit::from_gates(width, gates).unwrap()
    }

    #[test]
    fn swap_by_three_cnots() {
        let three = c(2, vec![Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)]);
        assert!(assert_equiv(&three, &c(2, vec![Gate::swap(0, 1)])).unwrap());
    }

    #[test]
    fn cnot_is_not_swap() {
        let a = c(2, vec![Gate::cnot(0, 1)]);
        let b = c(2, vec![Gate::swap(0, 1)]);
        assert!(!assert_equiv(&a, &b).unwrap());
        assert!(!equivalent(&a, &b, Equivalence::Unitary, Bounds::default()).unwrap());
    }

    #[test]
    fn width_mismatch_is_error() {
        assert!(matches!(
            assert_equiv(&Circuit::new(2), &Circuit::new(3)),
            Err(SimError::WidthMismatch(2, 3))
        ));
    }

    #[test]
    fn global_phase_is_ignored_but_relative_phase_is_not() {
        // √X·√X = X exactly (no phase), so this is a sanity baseline
        let roots = c(2, vec![Gate::sqrt_x(0, 1), Gate::sqrt_x(0, 1)]);
        assert!(assert_equiv(&roots, &c(2, vec![Gate::cnot(0, 1)])).unwrap());
        // a lone controlled-√X is not a permutation
        let one = c(2, vec![Gate::sqrt_x(0, 1)]);
        let mode = Equivalence::PermutationUpToPhase;
        assert!(!equivalent(&one, &c(2, vec![Gate::cnot(0, 1)]), mode, Bounds::default()).unwrap());
    }
}
