//! Majority/unmajority ripple adder with a single ancilla.
//!
//! Layout (2n+2 qubits): x = 0 is the carry-in ancilla, a_i = 1+i,
//! b_i = 1+n+i, and z = 2n+1 receives the carry-out. The running carry lives
//! in the A register itself: the majority block MAJ(c, b, a) leaves
//! c_{i+1} on a_i, and the unmajority block UMA restores a_i while writing
//! the sum bit to b_i.
//!
//! For n ≥ 4 the blocks are interleaved so that the CNOT work of the majority
//! stage runs ahead of the Toffoli chain and the sum CNOTs of the unmajority
//! stage trail behind it; only the Toffoli chain is on the critical path,
//! which gives a scheduled depth of (2n−1; 5; 0). Narrower widths use the
//! plain block-by-block form.

use revsim::{Circuit, Gate};

use crate::{AdderCircuit, AdderError, AdderKind, Alloc};

pub fn gen_cdkm(n: usize) -> Result<AdderCircuit, AdderError> {
    if n == 0 {
        return Err(AdderError::TooNarrow { n, min: 1 });
    }
    let mut al = Alloc::default();
    let x = al.one();
    let a = al.take(n);
    let b = al.take(n);
    let z = al.one();
    let mut c = Circuit::new(al.used());
    if n >= 4 {
        interleaved(&mut c, x, &a, &b, z);
    } else {
        blockwise(&mut c, x, &a, &b, z);
    }
    c.set_role("A", a.clone())?;
    c.set_role("B", b.clone())?;
    c.set_role("ancilla", vec![x])?;
    c.set_role("Cout", vec![z])?;
    Ok(AdderCircuit {
        kind: AdderKind::Cdkm,
        n,
        circuit: c,
        s: b.clone(),
        a,
        b,
        cout: z,
        ancillae: vec![x],
    })
}

fn maj(c: &mut Circuit, cin: usize, b: usize, a: usize) {
    c.push(Gate::cnot(a, b));
    c.push(Gate::cnot(a, cin));
    c.push(Gate::ccnot(cin, b, a));
}

fn uma(c: &mut Circuit, cin: usize, b: usize, a: usize) {
    c.push(Gate::ccnot(cin, b, a));
    c.push(Gate::cnot(a, cin));
    c.push(Gate::cnot(cin, b));
}

fn blockwise(c: &mut Circuit, x: usize, a: &[usize], b: &[usize], z: usize) {
    let n = a.len();
    let carry_in = |i: usize| if i == 0 { x } else { a[i - 1] };
    for i in 0..n {
        maj(c, carry_in(i), b[i], a[i]);
    }
    c.push(Gate::cnot(a[n - 1], z));
    for i in (0..n).rev() {
        uma(c, carry_in(i), b[i], a[i]);
    }
}

/// Gate order of the interleaved form. Requires n ≥ 4.
fn interleaved(c: &mut Circuit, x: usize, a: &[usize], b: &[usize], z: usize) {
    let n = a.len();
    let cn = |c: &mut Circuit, s: usize, t: usize| c.push(Gate::cnot(s, t));
    let tf = |c: &mut Circuit, p: usize, q: usize, t: usize| c.push(Gate::ccnot(p, q, t));

    for i in 1..n {
        cn(c, a[i], b[i]);
    }
    cn(c, a[1], x);
    tf(c, a[0], b[0], x);
    cn(c, a[2], a[1]);
    tf(c, x, b[1], a[1]);
    cn(c, a[3], a[2]);
    for i in 2..n - 2 {
        tf(c, a[i - 1], b[i], a[i]);
        cn(c, a[i + 2], a[i + 1]);
    }
    tf(c, a[n - 3], b[n - 2], a[n - 2]);
    cn(c, a[n - 1], z);
    tf(c, a[n - 2], b[n - 1], z);
    for &bi in &b[1..n - 1] {
        c.push(Gate::not(bi));
    }
    cn(c, x, b[1]);
    for i in 2..n {
        cn(c, a[i - 1], b[i]);
    }
    tf(c, a[n - 3], b[n - 2], a[n - 2]);
    for i in (2..=n - 3).rev() {
        tf(c, a[i - 1], b[i], a[i]);
        cn(c, a[i + 2], a[i + 1]);
        c.push(Gate::not(b[i + 1]));
    }
    tf(c, x, b[1], a[1]);
    cn(c, a[3], a[2]);
    c.push(Gate::not(b[2]));
    tf(c, a[0], b[0], x);
    cn(c, a[2], a[1]);
    c.push(Gate::not(b[1]));
    cn(c, a[1], x);
    for i in 0..n {
        cn(c, a[i], b[i]);
    }
}
