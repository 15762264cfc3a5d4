//! Generic lowering onto an architecture by SWAP insertion.
//!
//! On NTC every multi-qubit gate is handled on its own: the operands' states
//! are walked towards each other with adjacent SWAPs, the gate runs on the
//! now-adjacent qubits, and the SWAPs are replayed backwards so every state
//! is home again before the next gate. This is an upper bound, not an
//! optimised mapping; a CNOT at distance d costs 2(d−1) SWAPs.

use revsim::{Circuit, Gate, GateKind};

use crate::decompose::{decompose_ccnot_ntc, decompose_fredkin};
use crate::model::ArchModel;
use crate::ArchError;

#[derive(Clone, Debug)]
pub struct Lowered {
    pub circuit: Circuit,
    /// SWAP gates inserted for routing.
    pub swaps: usize,
}

/// Rewrites `c` so that it is legal on `arch`. AC lowering returns the
/// circuit unchanged.
pub fn lower(c: &Circuit, arch: &ArchModel) -> Result<Lowered, ArchError> {
    arch.check_width(c.width())?;
    let layout = match arch {
        ArchModel::Ac => return Ok(Lowered { circuit: c.clone(), swaps: 0 }),
        ArchModel::Ntc { layout } => layout,
    };
    let mut r = Router::new(layout);
    for g in c.gates() {
        let q = g.qubits();
        match g.kind() {
            GateKind::Not | GateKind::H => r.out.push(*g),
            GateKind::Ccnot => r.toffoli(q[0], q[1], q[2]),
            GateKind::Fredkin => {
                let [a, b, d] = decompose_fredkin(q[0], q[1], q[2]);
                r.two(a);
                r.toffoli(b.qubits()[0], b.qubits()[1], b.qubits()[2]);
                r.two(d);
            }
            _ => r.two(*g),
        }
    }
    let mut out = Circuit::from_gates(c.width(), r.out)?;
    for (name, qs) in c.roles() {
        out.set_role(name, qs.clone())?;
    }
    Ok(Lowered { circuit: out, swaps: r.swaps })
}

struct Router<'a> {
    layout: &'a [usize],
    slot_at: Vec<usize>,
    /// state index -> qubit currently holding it
    loc: Vec<usize>,
    /// qubit -> state index it holds
    holder: Vec<usize>,
    trail: Vec<(usize, usize)>,
    out: Vec<Gate>,
    swaps: usize,
}

impl<'a> Router<'a> {
    fn new(layout: &'a [usize]) -> Self {
        let mut slot_at = vec![0; layout.len()];
        for (q, &p) in layout.iter().enumerate() {
            slot_at[p] = q;
        }
        let ident: Vec<usize> = (0..layout.len()).collect();
        Router {
            layout,
            slot_at,
            loc: ident.clone(),
            holder: ident,
            trail: Vec::new(),
            out: Vec::new(),
            swaps: 0,
        }
    }

    fn pos(&self, state: usize) -> usize {
        self.layout[self.loc[state]]
    }

    fn exchange(&mut self, x: usize, y: usize) {
        self.out.push(Gate::swap(x, y));
        self.swaps += 1;
        let (sx, sy) = (self.holder[x], self.holder[y]);
        self.holder.swap(x, y);
        self.loc[sx] = y;
        self.loc[sy] = x;
    }

    /// Moves `state` one position towards `target_pos`.
    fn step_towards(&mut self, state: usize, target_pos: usize) {
        let p = self.pos(state);
        let next = if target_pos > p { p + 1 } else { p - 1 };
        let (x, y) = (self.loc[state], self.slot_at[next]);
        self.exchange(x, y);
        self.trail.push((x, y));
    }

    fn bring_adjacent(&mut self, mover: usize, anchor: usize) {
        while self.pos(mover).abs_diff(self.pos(anchor)) > 1 {
            let to = self.pos(anchor);
            self.step_towards(mover, to);
        }
    }

    fn undo(&mut self) {
        while let Some((x, y)) = self.trail.pop() {
            self.exchange(x, y);
        }
    }

    fn two(&mut self, g: Gate) {
        let q = g.qubits();
        let (a, b) = (q[0], q[1]);
        self.bring_adjacent(a, b);
        let g = g.remap(|s| self.loc[s]);
        self.out.push(g);
        self.undo();
    }

    fn toffoli(&mut self, c1: usize, c2: usize, t: usize) {
        let (c1, c2) = if self.pos(c2).abs_diff(self.pos(t)) < self.pos(c1).abs_diff(self.pos(t)) {
            (c2, c1)
        } else {
            (c1, c2)
        };
        self.bring_adjacent(c1, t);
        // c2 joins the {c1, t} pair from whichever side it is on
        let (lo, hi) = {
            let (p, q) = (self.pos(c1), self.pos(t));
            (p.min(q), p.max(q))
        };
        if self.pos(c2) < lo {
            while self.pos(c2) + 1 < lo {
                self.step_towards(c2, lo);
            }
        } else {
            while self.pos(c2) > hi + 1 {
                self.step_towards(c2, hi);
            }
        }
        // the target must end the run of three
        let (pt, p1, p2) = (self.pos(t), self.pos(c1), self.pos(c2));
        if pt.min(p1).min(p2) < pt && pt < pt.max(p1).max(p2) {
            self.step_towards(t, p2);
        }
        let (near, far) = if self.pos(c1).abs_diff(self.pos(t)) == 1 { (c1, c2) } else { (c2, c1) };
        let (near, far, tq) = (self.loc[near], self.loc[far], self.loc[t]);
        self.out.extend(decompose_ccnot_ntc(near, far, tq));
        self.undo();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check_legal;
    use revsim::assert_equiv;

    #[test]
    fn ac_is_identity() {
        let c = Circuit::from_gates(4, vec![Gate::ccnot(0, 3, 1), Gate::cnot(0, 3)]).unwrap();
        let l = lower(&c, &ArchModel::Ac).unwrap();
        assert_eq!(l.circuit, c);
        assert_eq!(l.swaps, 0);
    }

    #[test]
    fn adjacent_triple_needs_no_swaps() {
        let c = Circuit::from_gates(3, vec![Gate::ccnot(0, 1, 2)]).unwrap();
        let l = lower(&c, &ArchModel::ntc_identity(3)).unwrap();
        assert_eq!(l.swaps, 0);
        assert_eq!(l.circuit.len(), 5);
        assert!(assert_equiv(&c, &l.circuit).unwrap());
    }

    #[test]
    fn distant_cnot_costs_two_swaps_per_extra_step() {
        for d in 1..6 {
            let c = Circuit::from_gates(d + 1, vec![Gate::cnot(0, d)]).unwrap();
            let l = lower(&c, &ArchModel::ntc_identity(d + 1)).unwrap();
            assert_eq!(l.swaps, 2 * (d - 1));
            assert_eq!(l.circuit.len(), 2 * (d - 1) + 1);
            check_legal(&l.circuit, &ArchModel::ntc_identity(d + 1)).unwrap();
            assert!(assert_equiv(&c, &l.circuit).unwrap());
        }
    }

    #[test]
    fn toffoli_with_target_between_controls() {
        let c = Circuit::from_gates(6, vec![Gate::ccnot(0, 5, 2)]).unwrap();
        let arch = ArchModel::ntc_identity(6);
        let l = lower(&c, &arch).unwrap();
        check_legal(&l.circuit, &arch).unwrap();
        assert!(assert_equiv(&c, &l.circuit).unwrap());
    }
}
