//! Brute-force oracle for generated adders.

use std::fmt;

use revsim::{run_permutation, BasisState};

use crate::AdderCircuit;

/// First input on which an adder misbehaved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub a: u64,
    pub b: u64,
    pub what: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={}: {}", self.a, self.b, self.what)
    }
}

impl std::error::Error for Mismatch {}

/// Runs one addition and checks S, Cout, the restored operands and that every
/// scratch qubit is back at zero.
pub fn verify_pair(ac: &AdderCircuit, a: u64, b: u64) -> Result<(), Mismatch> {
    let n = ac.n;
    let fail = |what: String| Mismatch { a, b, what };
    let mut input = BasisState::zeros(ac.width());
    input.write(&ac.a, a);
    input.write(&ac.b, b);
    let out = run_permutation(&ac.circuit, &input).map_err(|e| fail(e.to_string()))?;

    let mask = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let sum = a.wrapping_add(b) & mask;
    let carry = if n >= 64 { a.checked_add(b).is_none() } else { (a + b) >> n == 1 };
    let got_s = out.read(&ac.s);
    if got_s != sum {
        return Err(fail(format!("sum {got_s}, expected {sum}")));
    }
    if out.get(ac.cout) != carry {
        return Err(fail(format!("carry-out {}, expected {}", out.get(ac.cout) as u8, carry as u8)));
    }
    if out.read(&ac.a) != a {
        return Err(fail(format!("A changed to {}", out.read(&ac.a))));
    }
    for q in ac.b_preserved() {
        if out.get(q) != input.get(q) {
            return Err(fail(format!("B qubit {q} not restored")));
        }
    }
    if let Some(q) = ac.ancillae.iter().find(|&&q| out.get(q)) {
        return Err(fail(format!("scratch qubit {q} left at 1")));
    }
    Ok(())
}

/// Checks all 2^(2n) operand pairs.
pub fn verify_exhaustive(ac: &AdderCircuit) -> Result<(), Mismatch> {
    assert!(ac.n <= 16, "exhaustive check over 2^(2n) pairs needs a small n");
    for a in 0..1u64 << ac.n {
        for b in 0..1u64 << ac.n {
            verify_pair(ac, a, b)?;
        }
    }
    Ok(())
}
