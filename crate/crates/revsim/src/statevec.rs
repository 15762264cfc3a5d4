//! Dense statevector simulation for small circuits.
//!
//! Only what the gate set needs: classical gates permute amplitudes, the
//! controlled square roots of X mix the target's two amplitudes when the
//! control is set, and the Hadamard mixes them unconditionally.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::circuit::Circuit;
use crate::error::SimError;
use crate::gate::{Gate, GateKind};
use crate::perm::{apply_classical_u64, Bounds};
use crate::state::BasisState;

/// Allowed drift of the squared norm from 1.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// √X = ½ [[1+i, 1−i], [1−i, 1+i]]
fn sqrt_x_matrix(dagger: bool) -> [[Complex64; 2]; 2] {
    let s = if dagger { -1.0 } else { 1.0 };
    let p = Complex64::new(0.5, 0.5 * s);
    let m = Complex64::new(0.5, -0.5 * s);
    [[p, m], [m, p]]
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    width: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn basis(width: usize, index: u64) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << width];
        amps[index as usize] = Complex64::new(1.0, 0.0);
        StateVector { width, amps }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, index: u64) -> Complex64 {
        self.amps[index as usize]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Nonzero amplitudes (above `eps` in magnitude) keyed by basis index.
    pub fn support(&self, eps: f64) -> BTreeMap<u64, Complex64> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > eps)
            .map(|(i, &a)| (i as u64, a))
            .collect()
    }

    fn apply(&mut self, g: &Gate) {
        match g.kind() {
            GateKind::SqrtX | GateKind::SqrtXDag => {
                let m = sqrt_x_matrix(g.kind() == GateKind::SqrtXDag);
                let (c, t) = (g.qubits()[0], g.qubits()[1]);
                for i in 0..self.amps.len() {
                    if i >> c & 1 == 1 && i >> t & 1 == 0 {
                        let j = i | 1 << t;
                        let (a0, a1) = (self.amps[i], self.amps[j]);
                        self.amps[i] = m[0][0] * a0 + m[0][1] * a1;
                        self.amps[j] = m[1][0] * a0 + m[1][1] * a1;
                    }
                }
            }
            GateKind::H => {
                let t = g.qubits()[0];
                let r = std::f64::consts::FRAC_1_SQRT_2;
                for i in 0..self.amps.len() {
                    if i >> t & 1 == 0 {
                        let j = i | 1 << t;
                        let (a0, a1) = (self.amps[i], self.amps[j]);
                        self.amps[i] = (a0 + a1) * r;
                        self.amps[j] = (a0 - a1) * r;
                    }
                }
            }
            _ => {
                let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
                for (i, &a) in self.amps.iter().enumerate() {
                    out[apply_classical_u64(g, i as u64) as usize] = a;
                }
                self.amps = out;
            }
        }
    }
}

/// Runs `c` on a basis input and returns the final state. The norm is checked
/// after every gate.
pub fn run_statevector(c: &Circuit, input: &BasisState) -> Result<StateVector, SimError> {
    run_statevector_bounded(c, input, Bounds::default())
}

pub fn run_statevector_bounded(
    c: &Circuit,
    input: &BasisState,
    bounds: Bounds,
) -> Result<StateVector, SimError> {
    if c.width() > bounds.statevector {
        return Err(SimError::WidthOverBound {
            width: c.width(),
            bound: bounds.statevector,
        });
    }
    input.check_width(c.width())?;
    let start = input.to_u64().expect("width ≤ statevector bound fits in u64");
    let mut sv = StateVector::basis(c.width(), start);
    evolve(c, &mut sv)?;
    Ok(sv)
}

/// Applies every gate of `c` to an arbitrary starting vector.
pub fn evolve(c: &Circuit, sv: &mut StateVector) -> Result<(), SimError> {
    for (index, g) in c.gates().iter().enumerate() {
        sv.apply(g);
        let norm = sv.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(SimError::NormViolation { index, norm });
        }
    }
    Ok(())
}

/// Convenience: the output as a map from basis index to amplitude.
pub fn output_map(c: &Circuit, input: &BasisState) -> Result<BTreeMap<u64, Complex64>, SimError> {
    Ok(run_statevector(c, input)?.support(1e-12))
}
