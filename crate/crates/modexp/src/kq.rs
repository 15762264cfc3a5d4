//! KQ: logical qubits times Toffoli time steps, the workload that error
//! correction has to sustain.

use crate::adder::AdderModel;
use crate::algorithm::Algorithm;

/// KQ of one n-bit addition: qubits × Toffoli depth, to first order.
pub fn adder_kq(adder: AdderModel, n: usize) -> Option<f64> {
    let n = n as f64;
    match adder {
        AdderModel::Vbe => Some(3.0 * n * 3.0 * n),
        AdderModel::Cdkm => Some(2.0 * n * 2.0 * n),
        AdderModel::Csum { .. } => Some(6.0 * n * 4.0 * n.log2()),
        AdderModel::Qcla => Some(4.0 * n * 4.0 * n.log2()),
        _ => None,
    }
}

/// KQ of one modular multiplication: n modular additions × adder calls per
/// modular addition × adder depth × first-order qubit count.
pub(crate) fn multiplier_kq(algorithm: Algorithm, n: usize) -> Option<f64> {
    let nf = n as f64;
    let log = nf.log2();
    let (calls, depth, qubits) = match algorithm {
        Algorithm::CVbe => (5.0, 3.0 * nf, 7.0 * nf),
        Algorithm::D => (2.0, 4.0 * log, 5.0 * nf),
        Algorithm::E => (2.0, 4.0 * log, 3.0 * nf),
        Algorithm::F => (2.0, 2.0 * nf, 3.0 * nf),
        Algorithm::G => (3.0, 2.0 * nf, 6.0 * nf),
        Algorithm::Bcdp => return None,
    };
    Some(nf * calls * depth * qubits)
}

/// KQ of the whole exponentiation: 2⌈n/w⌉ multiplications. Multipliers
/// running side by side do not add to it, since the qubits of a finished
/// partial product are disentangled from the rest of the computation.
pub fn modexp_kq(algorithm: Algorithm, n: usize, w: usize) -> Option<f64> {
    let w = if algorithm == Algorithm::CVbe { 1 } else { w.max(1) };
    multiplier_kq(algorithm, n).map(|m| 2.0 * n.div_ceil(w) as f64 * m)
}
