//! Carry-select (CSLA) and conditional-sum (CSUM) adders.
//!
//! The operands are cut into a low group of f bits and g−1 high groups of m
//! bits (f + (g−1)m = n). The low group is an ordinary ripple adder whose
//! carry-out selects the result of the first high group. Each high group
//! computes both candidate sums at once, for carry-in 0 and carry-in 1:
//!
//! ```text
//!   per high group (6m−1 qubits):
//!     a[m]   operand, restored
//!     b[m]   operand; holds the carry-in-0 sum while the group is live
//!     k0[m]  carries for carry-in 0;  k0[m-1] is the group generate G
//!     k1[m]  carries for carry-in 1;  k1[m-1] becomes the group propagate P
//!     t[m-1] the carry-in-1 sum of bits 1..m
//!     out[m] receives the selected sum
//! ```
//!
//! The group carries C_j are then resolved either by rippling
//! C_{j+1} = G_j ⊕ C_j·P_j through the groups (CSLA) or by the logarithmic
//! carry network over (G_j, P_j) pairs (CSUM). A multiplexer per group copies
//! the selected sum into `out`, after which everything except the low
//! group's in-place sum and the `out` registers is uncomputed.
//!
//! The multiplexer swaps b_i and t_i under C_j with an expanded Fredkin gate
//! (CNOT, CCNOT, CNOT), copies b_i out and swaps back. The optional compact
//! form instead xors s0 ⊕ C·(s0 ⊕ s1) straight into `out`, one Toffoli per
//! bit. Select-signal fanout is the number of copies of C_j each group
//! makes so that its multiplexer Toffolis do not all queue on one control.
//!
//! The low group's sum is written in place over its B bits; the high groups'
//! sums land in `out`, so S = B_low ‖ out_1 ‖ … ‖ out_{g−1}.

use revsim::{Circuit, Gate};

use crate::lookahead::{scratch_count, Lookahead};
use crate::ripple::carry_chain;
use crate::{AdderCircuit, AdderError, AdderKind, Alloc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Fanout {
    /// One select line drives every multiplexer Toffoli of its group.
    #[default]
    One,
    /// Up to four copies of the select line per group.
    Four,
    /// One copy per bit.
    Full,
}

impl Fanout {
    pub fn copies(self, m: usize) -> usize {
        match self {
            Fanout::One => 1,
            Fanout::Four => m.min(4),
            Fanout::Full => m,
        }
    }
}

impl std::str::FromStr for Fanout {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" | "one" => Ok(Fanout::One),
            "4" | "four" => Ok(Fanout::Four),
            "full" => Ok(Fanout::Full),
            _ => Err(format!("fanout must be 1, 4 or full, got `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MuxStyle {
    /// Swap, copy, swap back: two expanded Fredkin gates per bit.
    #[default]
    Fredkin,
    /// Direct select into the output, one Toffoli per bit.
    Compact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelectParams {
    pub n: usize,
    pub m: usize,
    pub g: usize,
    pub f: usize,
    pub fanout: Fanout,
    pub mux: MuxStyle,
}

impl SelectParams {
    /// Checks f + (g−1)m = n with at least `min_g` groups.
    pub fn new(n: usize, m: usize, g: usize, f: usize, min_g: usize) -> Result<Self, AdderError> {
        let ok = m >= 1 && f >= 1 && g >= min_g && f + (g - 1) * m == n;
        if !ok {
            return Err(AdderError::Groups { n, m, g, f, min_g });
        }
        Ok(SelectParams {
            n,
            m,
            g,
            f,
            fanout: Fanout::default(),
            mux: MuxStyle::default(),
        })
    }

    /// Carry-select layout from (n, m, f); g follows.
    pub fn csla(n: usize, m: usize, f: usize) -> Result<Self, AdderError> {
        let bad = AdderError::Groups { n, m, g: 0, f, min_g: 2 };
        if m == 0 || f == 0 || f >= n || !(n - f).is_multiple_of(m) {
            return Err(bad);
        }
        SelectParams::new(n, m, (n - f) / m + 1, f, 2)
    }

    /// Conditional-sum layout from (n, m, g); f follows.
    pub fn csum(n: usize, m: usize, g: usize) -> Result<Self, AdderError> {
        let used = g.saturating_sub(1) * m;
        if g < 3 || used >= n {
            return Err(AdderError::Groups { n, m, g, f: n.saturating_sub(used), min_g: 3 });
        }
        SelectParams::new(n, m, g, n - used, 3)
    }

    /// Group size near √(8n/5), which balances the ripple through the
    /// groups against the ripple inside a group.
    pub fn default_csla(n: usize) -> Result<Self, AdderError> {
        if n < 2 {
            return Err(AdderError::TooNarrow { n, min: 2 });
        }
        let m = ((8.0 * n as f64 / 5.0).sqrt().round() as usize).clamp(1, n - 1);
        let groups = (n - 1) / m;
        SelectParams::csla(n, m, n - groups * m)
    }

    pub fn default_csum(n: usize) -> Result<Self, AdderError> {
        if n < 3 {
            return Err(AdderError::TooNarrow { n, min: 3 });
        }
        let m = match n {
            0..=5 => 1,
            6..=31 => 2,
            _ => 4,
        };
        let mut p = SelectParams::csum(n, m, (n - 1) / m + 1)?;
        p.fanout = Fanout::Four;
        Ok(p)
    }
}

pub fn gen_csla(n: usize, m: usize, f: usize) -> Result<AdderCircuit, AdderError> {
    gen_csla_with(SelectParams::csla(n, m, f)?)
}

pub fn gen_csla_with(p: SelectParams) -> Result<AdderCircuit, AdderError> {
    let p = SelectParams::new(p.n, p.m, p.g, p.f, 2)?.with(p);
    build(p, AdderKind::Csla)
}

pub fn gen_csum(n: usize, m: usize, g: usize, fanout: Fanout) -> Result<AdderCircuit, AdderError> {
    let mut p = SelectParams::csum(n, m, g)?;
    p.fanout = fanout;
    gen_csum_with(p)
}

pub fn gen_csum_with(p: SelectParams) -> Result<AdderCircuit, AdderError> {
    let p = SelectParams::new(p.n, p.m, p.g, p.f, 3)?.with(p);
    build(p, AdderKind::Csum)
}

impl SelectParams {
    fn with(self, other: SelectParams) -> Self {
        SelectParams {
            fanout: other.fanout,
            mux: other.mux,
            ..self
        }
    }
}

struct Group {
    a: Vec<usize>,
    b: Vec<usize>,
    k0: Vec<usize>,
    k1: Vec<usize>,
    t: Vec<usize>,
    out: Vec<usize>,
    /// Extra copies of the select line (the line itself is not included).
    copies: Vec<usize>,
}

impl Group {
    /// Both speculative sums plus the (G, P) pair.
    fn speculate(&self) -> Vec<Gate> {
        let m = self.a.len();
        let (a, b, k0, k1, t) = (&self.a, &self.b, &self.k0, &self.k1, &self.t);
        let mut v = Vec::new();
        for i in 0..m {
            v.push(Gate::ccnot(a[i], b[i], k0[i]));
            v.push(Gate::cnot(k0[i], k1[i]));
            v.push(Gate::cnot(a[i], b[i]));
        }
        for i in 1..m {
            v.push(Gate::cnot(b[i], t[i - 1]));
        }
        v.push(Gate::cnot(b[0], k1[0]));
        for i in 1..m {
            v.push(Gate::ccnot(k0[i - 1], b[i], k0[i]));
            v.push(Gate::ccnot(k1[i - 1], t[i - 1], k1[i]));
        }
        for i in 1..m {
            v.push(Gate::cnot(k0[i - 1], b[i]));
            v.push(Gate::cnot(k1[i - 1], t[i - 1]));
        }
        v.push(Gate::cnot(k0[m - 1], k1[m - 1]));
        v
    }

    fn generate(&self) -> usize {
        *self.k0.last().expect("m >= 1")
    }

    fn propagate(&self) -> usize {
        *self.k1.last().expect("m >= 1")
    }

    /// Copies of `sel` by doubling.
    fn fan_out(&self, sel: usize) -> Vec<Gate> {
        let mut have = vec![sel];
        let mut v = Vec::new();
        let mut todo = self.copies.iter();
        'outer: loop {
            let snapshot = have.clone();
            for s in snapshot {
                match todo.next() {
                    Some(&q) => {
                        v.push(Gate::cnot(s, q));
                        have.push(q);
                    }
                    None => break 'outer,
                }
            }
        }
        v
    }

    fn select_line(&self, sel: usize, i: usize) -> usize {
        let k = self.copies.len() + 1;
        match i % k {
            0 => sel,
            r => self.copies[r - 1],
        }
    }

    /// (select, copy-out, unselect) gate lists.
    fn mux(&self, sel: usize, style: MuxStyle) -> (Vec<Gate>, Vec<Gate>, Vec<Gate>) {
        let m = self.a.len();
        let (b, t, out) = (&self.b, &self.t, &self.out);
        let mut pre = Vec::new();
        let mut copy = vec![Gate::cnot(b[0], out[0]), Gate::cnot(self.select_line(sel, 0), out[0])];
        match style {
            MuxStyle::Fredkin => {
                for i in 1..m {
                    let s = self.select_line(sel, i);
                    pre.extend([
                        Gate::cnot(t[i - 1], b[i]),
                        Gate::ccnot(s, b[i], t[i - 1]),
                        Gate::cnot(t[i - 1], b[i]),
                    ]);
                    copy.push(Gate::cnot(b[i], out[i]));
                }
            }
            MuxStyle::Compact => {
                for i in 1..m {
                    let s = self.select_line(sel, i);
                    pre.push(Gate::cnot(b[i], t[i - 1]));
                    copy.push(Gate::cnot(b[i], out[i]));
                    copy.push(Gate::ccnot(s, t[i - 1], out[i]));
                }
            }
        }
        let mut post = pre.clone();
        post.reverse();
        (pre, copy, post)
    }
}

fn reversed(mut v: Vec<Gate>) -> Vec<Gate> {
    v.reverse();
    v
}

fn build(p: SelectParams, kind: AdderKind) -> Result<AdderCircuit, AdderError> {
    let SelectParams { n, m, g, f, .. } = p;
    let mut al = Alloc::default();
    let a0 = al.take(f);
    let b0 = al.take(f);
    let c0 = al.take(f);
    let copies = p.fanout.copies(m);
    let groups: Vec<Group> = (1..g)
        .map(|_| Group {
            a: al.take(m),
            b: al.take(m),
            k0: al.take(m),
            k1: al.take(m),
            t: al.take(m - 1),
            out: al.take(m),
            copies: al.take(copies - 1),
        })
        .collect();
    let scratch = if kind == AdderKind::Csum { al.take(scratch_count(g)) } else { Vec::new() };
    let cout = al.one();

    // select line of high group j (0-based) is sel[j]; sel[g-1] is the carry-out
    let mut sel = vec![c0[f - 1]];
    sel.extend(groups.iter().map(Group::generate));

    let carry_net: Vec<Gate> = match kind {
        AdderKind::Csum => {
            let p0: Vec<usize> = groups.iter().map(Group::propagate).collect();
            Lookahead::new(&sel, &p0, &scratch).gates(g)
        }
        _ => groups
            .iter()
            .enumerate()
            .map(|(j, gr)| Gate::ccnot(sel[j], gr.propagate(), gr.generate()))
            .collect(),
    };

    let mut c = Circuit::new(al.used());
    carry_chain(&mut c, &a0, &b0, &c0);
    let spec: Vec<Vec<Gate>> = groups.iter().map(Group::speculate).collect();
    for s in &spec {
        c.extend(s.iter().copied());
    }
    c.extend(carry_net.iter().copied());
    c.push(Gate::cnot(sel[g - 1], cout));

    let fans: Vec<Vec<Gate>> = groups.iter().enumerate().map(|(j, gr)| gr.fan_out(sel[j])).collect();
    let muxes: Vec<_> = groups.iter().enumerate().map(|(j, gr)| gr.mux(sel[j], p.mux)).collect();
    for fo in &fans {
        c.extend(fo.iter().copied());
    }
    for (pre, _, _) in &muxes {
        c.extend(pre.iter().copied());
    }
    for (_, copy, _) in &muxes {
        c.extend(copy.iter().copied());
    }
    for (_, _, post) in &muxes {
        c.extend(post.iter().copied());
    }
    for fo in fans.into_iter().rev() {
        c.extend(reversed(fo));
    }
    c.extend(reversed(carry_net));
    for s in spec.into_iter().rev() {
        c.extend(reversed(s));
    }
    low_group_finish(&mut c, &a0, &b0, &c0);

    // registers
    let mut a = a0.clone();
    let mut b = b0.clone();
    let mut s = b0;
    let mut carries = c0;
    let mut anc = Vec::new();
    let mut outs = Vec::new();
    for gr in &groups {
        a.extend(&gr.a);
        b.extend(&gr.b);
        s.extend(&gr.out);
        outs.extend(&gr.out);
        carries.extend(gr.k0.iter().chain(&gr.k1));
        anc.extend(gr.t.iter().chain(&gr.copies));
    }
    anc.extend(scratch);
    c.set_role("A", a.clone())?;
    c.set_role("B", b.clone())?;
    c.set_role("out", outs)?;
    c.set_role("carry", carries.clone())?;
    c.set_role("ancilla", anc.clone())?;
    c.set_role("Cout", vec![cout])?;
    carries.extend(anc);
    Ok(AdderCircuit {
        kind,
        n,
        circuit: c,
        a,
        b,
        s,
        cout,
        ancillae: carries,
    })
}

/// With b_i = a_i ⊕ b_i and the low carries present: write the sums and erase
/// every carry, top bit first.
fn low_group_finish(c: &mut Circuit, a: &[usize], b: &[usize], carries: &[usize]) {
    for i in (0..a.len()).rev() {
        if i > 0 {
            c.push(Gate::ccnot(carries[i - 1], b[i], carries[i]));
        }
        c.push(Gate::cnot(a[i], b[i]));
        c.push(Gate::ccnot(a[i], b[i], carries[i]));
        if i > 0 {
            c.push(Gate::cnot(carries[i - 1], b[i]));
        }
        c.push(Gate::cnot(a[i], b[i]));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        assert!(SelectParams::csla(4, 2, 2).is_ok());
        assert!(SelectParams::csla(4, 3, 2).is_err());
        assert!(SelectParams::csla(4, 2, 4).is_err());
        assert_eq!(SelectParams::csum(16, 2, 8).unwrap().f, 2);
        assert!(SelectParams::csum(6, 2, 2).is_err());
        assert!(SelectParams::csum(6, 2, 3).is_ok());
        assert!(SelectParams::csum(6, 3, 3).is_err());
    }

    #[test]
    fn group_space() {
        // 3f low-group qubits, 6m-1 per high group plus select copies, one carry-out
        let p = SelectParams::csla(7, 3, 1).unwrap();
        let ac = gen_csla_with(p).unwrap();
        assert_eq!(ac.width(), 3 + 2 * 17 + 1);
    }

    #[test]
    fn default_layouts() {
        assert_eq!(SelectParams::default_csla(40).unwrap().m, 8);
        for n in 3..40 {
            let p = SelectParams::default_csum(n).unwrap();
            assert_eq!(p.f + (p.g - 1) * p.m, n);
        }
    }
}
