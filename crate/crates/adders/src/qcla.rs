//! In-place carry-lookahead adder for power-of-two widths.
//!
//! Layout: A = 0..n, B = n..2n (overwritten with the sum), Z = 2n..3n where
//! Z holds the carries c_1..c_n (c_n is the carry-out), then the
//! n − log₂n − 1 propagate scratch qubits of the network. Total
//! 4n − log₂n − 1.
//!
//! 1. Z(i+1) ⊕= a_i b_i, then b_i ⊕= a_i: generate and propagate bits.
//! 2. The carry network turns every Z(i) into c_i.
//! 3. b_i ⊕= c_i gives the sum bits.
//! 4. The carries c_1..c_{n−1} are erased by running the network for n−1
//!    positions backwards on the complemented sum: with s̄_i = ¬(a_i ⊕ b_i ⊕ c_i)
//!    the generate/propagate of (a, s̄) reproduce exactly the carries that
//!    were computed, so the inverse network clears them.

use revsim::{Circuit, Gate};

use crate::lookahead::{flog, scratch_count, Lookahead};
use crate::{AdderCircuit, AdderError, AdderKind, Alloc};

pub fn gen_qcla(n: usize) -> Result<AdderCircuit, AdderError> {
    if n < 2 {
        return Err(AdderError::TooNarrow { n, min: 2 });
    }
    if !n.is_power_of_two() {
        return Err(AdderError::NotPowerOfTwo(n));
    }
    let mut al = Alloc::default();
    let a = al.take(n);
    let b = al.take(n);
    let z = al.take(n); // z[i-1] = Z(i)
    let x = al.take(scratch_count(n));
    debug_assert_eq!(al.used(), 4 * n - flog(n) as usize - 1);

    let la = Lookahead::new(&z, &b[1..], &x);
    let mut c = Circuit::new(al.used());
    for i in 0..n {
        c.push(Gate::ccnot(a[i], b[i], z[i]));
    }
    for i in 0..n {
        c.push(Gate::cnot(a[i], b[i]));
    }
    c.extend(la.gates(n));
    for i in 1..n {
        c.push(Gate::cnot(z[i - 1], b[i]));
    }
    // erase c_1..c_{n-1}
    for &bi in &b[..n - 1] {
        c.push(Gate::not(bi));
    }
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i], b[i]));
    }
    let mut undo = la.gates(n - 1);
    undo.reverse();
    c.extend(undo);
    for i in 1..n - 1 {
        c.push(Gate::cnot(a[i], b[i]));
    }
    for i in 0..n - 1 {
        c.push(Gate::ccnot(a[i], b[i], z[i]));
    }
    for &bi in &b[..n - 1] {
        c.push(Gate::not(bi));
    }

    let cout = z[n - 1];
    let carries = z[..n - 1].to_vec();
    c.set_role("A", a.clone())?;
    c.set_role("B", b.clone())?;
    c.set_role("carry", carries.clone())?;
    c.set_role("Cout", vec![cout])?;
    c.set_role("ancilla", x.clone())?;
    let mut ancillae = carries;
    ancillae.extend(x);
    Ok(AdderCircuit {
        kind: AdderKind::Qcla,
        n,
        circuit: c,
        s: b.clone(),
        a,
        b,
        cout,
        ancillae,
    })
}
