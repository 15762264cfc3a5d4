//! The Steane [[7,1,3]] logical-zero encoder.
//!
//! Hadamards on qubits 0–2 spread them over all eight values; each of those
//! qubits then copies itself into three of the parity qubits 3–6. Reading a
//! basis state with qubit 6 as the leftmost character, the low three bits run
//! through 0..7 and the high four are their parity checks.

use revsim::{Circuit, Gate};

/// (control, target) pairs of the encoder, in program order.
pub const ENCODER_CNOTS: [(usize, usize); 9] =
    [(0, 6), (0, 5), (0, 3), (1, 6), (1, 4), (1, 3), (2, 5), (2, 4), (2, 3)];

/// A placement of the encoder's qubits on two nodes along a line; the six
/// cuts between neighbours are the breakpoints a–f. With this order the
/// number of encoder CNOTs crossing each cut is 2, 3, 4, 3, 3, 2.
pub const DISTRIBUTED_ORDER: [usize; 7] = [4, 1, 2, 3, 5, 0, 6];

pub fn steane_zero_encoder() -> Circuit {
    let mut gates: Vec<Gate> = (0..3).map(Gate::h).collect();
    gates.extend(ENCODER_CNOTS.iter().map(|&(c, t)| Gate::cnot(c, t)));
    let mut c = Circuit::from_gates(7, gates).expect("operands below 7");
    c.set_role("data", (3..7).collect()).expect("valid role");
    c.set_role("seed", (0..3).collect()).expect("valid role");
    c
}

/// The eight codewords of |0_L⟩ as 7-character bit strings, qubit 6 first,
/// ordered by their low three bits.
pub fn steane_codewords() -> Vec<String> {
    (0u32..8)
        .map(|x| {
            let mut v = x;
            for &(c, t) in &ENCODER_CNOTS {
                v ^= (v >> c & 1) << t;
            }
            format!("{v:07b}")
        })
        .collect()
}
