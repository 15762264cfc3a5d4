//! Carry-ripple addition with an explicit carry register.
//!
//! The forward pass computes every carry c_{i+1} = MAJ(a_i, b_i, c_i) with two
//! Toffolis per bit while turning b_i into a_i ⊕ b_i; the backward pass
//! erases the carries again in reverse order and writes each sum bit on the
//! way down. The top carry is either kept as a carry-out or never computed.

use revsim::{Circuit, Gate};

use crate::{AdderCircuit, AdderError, AdderKind, Alloc};

/// Appends `b ← a + b` to `c`.
///
/// `carries[i]` holds c_{i+1} for i in 0..k−1 and must start at zero; it is
/// returned to zero. With `cout = Some(q)` the carry out of the top bit is
/// xored into `q`; otherwise the addition is modulo 2^k. `a` is preserved.
pub fn ripple_add(c: &mut Circuit, a: &[usize], b: &[usize], carries: &[usize], cout: Option<usize>) {
    let k = a.len();
    assert_eq!(b.len(), k, "operand lengths differ");
    assert!(carries.len() + 1 >= k, "need k-1 carry qubits");
    if k == 0 {
        return;
    }
    // carry[i] is c_i for i in 1..=k; c_0 is implicitly 0
    let carry = |i: usize| -> usize {
        if i == k {
            cout.expect("top carry only exists with a carry-out")
        } else {
            carries[i - 1]
        }
    };
    let top = if cout.is_some() { k } else { k - 1 };

    for i in 0..top {
        c.push(Gate::ccnot(a[i], b[i], carry(i + 1)));
        c.push(Gate::cnot(a[i], b[i]));
        if i > 0 {
            c.push(Gate::ccnot(carry(i), b[i], carry(i + 1)));
        }
    }
    // top bit: only its sum is needed
    let t = k - 1;
    if cout.is_none() {
        c.push(Gate::cnot(a[t], b[t]));
    }
    if t > 0 {
        c.push(Gate::cnot(carry(t), b[t]));
    }
    for i in (0..t).rev() {
        if i > 0 {
            c.push(Gate::ccnot(carry(i), b[i], carry(i + 1)));
        }
        c.push(Gate::cnot(a[i], b[i]));
        c.push(Gate::ccnot(a[i], b[i], carry(i + 1)));
        if i > 0 {
            c.push(Gate::cnot(carry(i), b[i]));
        }
        c.push(Gate::cnot(a[i], b[i]));
    }
}

/// Appends only the carry computation of `a + b` up to and including c_k
/// (into `carries[k-1]`), leaving b_i = a_i ⊕ b_i. Undo with
/// [`carry_chain_undo`].
pub fn carry_chain(c: &mut Circuit, a: &[usize], b: &[usize], carries: &[usize]) {
    for i in 0..a.len() {
        c.push(Gate::ccnot(a[i], b[i], carries[i]));
        c.push(Gate::cnot(a[i], b[i]));
        if i > 0 {
            c.push(Gate::ccnot(carries[i - 1], b[i], carries[i]));
        }
    }
}

pub fn carry_chain_undo(c: &mut Circuit, a: &[usize], b: &[usize], carries: &[usize]) {
    for i in (0..a.len()).rev() {
        if i > 0 {
            c.push(Gate::ccnot(carries[i - 1], b[i], carries[i]));
        }
        c.push(Gate::cnot(a[i], b[i]));
        c.push(Gate::ccnot(a[i], b[i], carries[i]));
    }
}

/// Ripple adder on 3n qubits: A = 0..n, B = n..2n (sum written here),
/// carries c_1..c_{n−1} and the carry-out c_n above that.
///
/// The lowest bit has no carry-in, so there is no c_0 qubit and the first
/// majority collapses to a single Toffoli. Gate count (4n−4; 4n−3; 0) for
/// n ≥ 2; the 1-bit adder is a half adder (1; 1; 0).
pub fn gen_vbe(n: usize) -> Result<AdderCircuit, AdderError> {
    if n == 0 {
        return Err(AdderError::TooNarrow { n, min: 1 });
    }
    let mut al = Alloc::default();
    let a = al.take(n);
    let b = al.take(n);
    let carries = al.take(n - 1);
    let cout = al.one();

    let mut c = Circuit::new(al.used());
    ripple_add(&mut c, &a, &b, &carries, Some(cout));
    c.set_role("A", a.clone())?;
    c.set_role("B", b.clone())?;
    c.set_role("carry", carries.clone())?;
    c.set_role("Cout", vec![cout])?;

    Ok(AdderCircuit {
        kind: AdderKind::Vbe,
        n,
        circuit: c,
        s: b.clone(),
        a,
        b,
        cout,
        ancillae: carries,
    })
}
