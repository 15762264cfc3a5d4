//! Hand-placed ripple-carry adder for the neighbour-only line.
//!
//! The line holds c_0 a_0 b_0 c_1 a_1 b_1 … c_{n−1} a_{n−1} b_{n−1} c_n
//! (3n+1 qubits, c_0 stays 0, c_n receives the carry-out). Every Toffoli
//! acts on three consecutive positions with the target at one end. The
//! carry for position i+1 is c_{i+1} ⊕= a_i b_i followed by
//! c_{i+1} ⊕= c_i (a_i ⊕ b_i); the second Toffoli needs c_i next to b_i, which
//! is arranged by swapping c_i with a_i (the two are adjacent). The swaps are
//! undone on the way back, so every value ends where it started.

use revsim::{Circuit, Gate};

use crate::decompose::decompose_ccnot_ntc;
use crate::ArchError;

#[derive(Clone, Debug)]
pub struct NtcTemplate {
    pub n: usize,
    /// Legal NTC circuit (identity layout): Toffolis already expanded.
    pub circuit: Circuit,
    /// The same gate sequence with each Toffoli kept as one CCNOT on three
    /// consecutive positions; classical, for exhaustive checking.
    pub macro_circuit: Circuit,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub cout: usize,
    pub ancillae: Vec<usize>,
}

#[derive(Clone, Copy)]
enum Name {
    C(usize),
    A(usize),
    B(usize),
}

struct Line {
    pos: Vec<usize>,
    at: Vec<usize>,
    n: usize,
    expanded: Vec<Gate>,
    macros: Vec<Gate>,
}

impl Line {
    fn new(n: usize) -> Self {
        let w = 3 * n + 1;
        Line { pos: (0..w).collect(), at: (0..w).collect(), n, expanded: Vec::new(), macros: Vec::new() }
    }

    fn id(&self, q: Name) -> usize {
        match q {
            Name::C(i) => 3 * i,
            Name::A(i) => 3 * i + 1,
            Name::B(i) => 3 * i + 2,
        }
    }

    fn p(&self, q: Name) -> usize {
        self.pos[self.id(q)]
    }

    fn swap(&mut self, x: Name, y: Name) {
        let (ix, iy) = (self.id(x), self.id(y));
        let (px, py) = (self.pos[ix], self.pos[iy]);
        debug_assert_eq!(px.abs_diff(py), 1);
        let g = Gate::swap(px, py);
        self.expanded.push(g);
        self.macros.push(g);
        self.pos.swap(ix, iy);
        self.at.swap(px, py);
    }

    fn cnot(&mut self, c: Name, t: Name) {
        let (pc, pt) = (self.p(c), self.p(t));
        debug_assert_eq!(pc.abs_diff(pt), 1);
        let g = Gate::cnot(pc, pt);
        self.expanded.push(g);
        self.macros.push(g);
    }

    fn ccnot(&mut self, c1: Name, c2: Name, t: Name) {
        let (p1, p2, pt) = (self.p(c1), self.p(c2), self.p(t));
        let (near, far) = if p1.abs_diff(pt) == 1 { (p1, p2) } else { (p2, p1) };
        debug_assert!(near.abs_diff(pt) == 1 && far.abs_diff(pt) == 2);
        self.expanded.extend(decompose_ccnot_ntc(near, far, pt));
        self.macros.push(Gate::ccnot(p1, p2, pt));
    }

    fn at_home(&self) -> bool {
        self.pos.iter().enumerate().all(|(i, &p)| i == p) && self.at.len() == 3 * self.n + 1
    }
}

/// Builds the n-bit template; the result computes B ← A + B mod 2^n and
/// c_n ⊕= carry-out, with A restored and c_0..c_{n−1} returned to zero.
pub fn vbe_ntc_template(n: usize) -> Result<NtcTemplate, ArchError> {
    use Name::{A, B, C};
    if n == 0 {
        return Err(ArchError::TemplateWidth);
    }
    let mut l = Line::new(n);

    l.ccnot(A(0), B(0), C(1));
    l.cnot(A(0), B(0));
    for i in 1..n {
        l.ccnot(A(i), B(i), C(i + 1));
        l.cnot(A(i), B(i));
        l.swap(C(i), A(i));
        l.ccnot(C(i), B(i), C(i + 1));
    }
    if n > 1 {
        // top bit: the sum needs c_{n−1} but no carry has to be undone
        l.cnot(C(n - 1), B(n - 1));
        l.swap(C(n - 1), A(n - 1));
    }
    for i in (0..n - 1).rev() {
        if i > 0 {
            l.ccnot(C(i), B(i), C(i + 1));
            l.swap(C(i), A(i));
        }
        l.cnot(A(i), B(i));
        l.ccnot(A(i), B(i), C(i + 1));
        if i > 0 {
            // b_i ⊕= a_i ⊕ c_i with c_i two positions away: route through a_i
            l.cnot(C(i), A(i));
            l.cnot(A(i), B(i));
            l.cnot(C(i), A(i));
        } else {
            l.cnot(A(i), B(i));
        }
    }
    debug_assert!(l.at_home());

    let width = 3 * n + 1;
    let a: Vec<usize> = (0..n).map(|i| 3 * i + 1).collect();
    let b: Vec<usize> = (0..n).map(|i| 3 * i + 2).collect();
    let carries: Vec<usize> = (0..n).map(|i| 3 * i).collect();
    let cout = 3 * n;
    let mut circuit = Circuit::from_gates(width, l.expanded)?;
    let mut macro_circuit = Circuit::from_gates(width, l.macros)?;
    for c in [&mut circuit, &mut macro_circuit] {
        c.set_role("A", a.clone())?;
        c.set_role("B", b.clone())?;
        c.set_role("carry", carries.clone())?;
        c.set_role("Cout", vec![cout])?;
    }
    Ok(NtcTemplate { n, circuit, macro_circuit, a, b, cout, ancillae: carries })
}
