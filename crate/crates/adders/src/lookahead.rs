//! Logarithmic-depth carry network (parallel prefix over generate/propagate
//! pairs), shared by the lookahead adder and the conditional-sum adder.
//!
//! Positions are numbered 0..nn. On entry `z(i+1)` holds the generate bit of
//! position i and `p0(i)` its propagate bit (position 0's propagate is never
//! read); on exit `z(i)` holds the carry into position i for every
//! i in 1..=nn. The network needs scratch qubits for the propagate products
//! of blocks of 2^t positions, t ≥ 1; they are computed, used and erased
//! again inside the network.
//!
//! Rounds, with P_0 = p0 and P_t[m] = P_{t−1}[2m] · P_{t−1}[2m+1]:
//!
//! * P rounds:   P_t[m] for 1 ≤ m < ⌊nn/2^t⌋, t = 1..⌊log nn⌋−1
//! * G rounds:   z(2^t m + 2^t) ⊕= z(2^t m + 2^{t−1}) · P_{t−1}[2m+1]
//! * C rounds:   z(2^t m + 2^{t−1}) ⊕= z(2^t m) · P_{t−1}[2m], top-down
//! * P⁻¹ rounds: the P rounds in reverse.

use std::collections::BTreeMap;

use revsim::Gate;

pub(crate) fn flog(x: usize) -> u32 {
    debug_assert!(x > 0);
    usize::BITS - 1 - x.leading_zeros()
}

/// Number of scratch qubits the network over `nn` positions needs.
pub fn scratch_count(nn: usize) -> usize {
    if nn < 4 {
        return 0;
    }
    (1..flog(nn)).map(|t| (nn >> t).saturating_sub(1)).sum()
}

/// Qubit assignment for one network instance.
#[derive(Clone, Debug)]
pub struct Lookahead {
    /// `z[i]` for i in 0..=nn; index 0 is unused.
    z: Vec<usize>,
    /// `p0[i]` for i in 0..nn; index 0 is unused.
    p0: Vec<usize>,
    /// P_t[m] → qubit.
    x: BTreeMap<(u32, usize), usize>,
}

impl Lookahead {
    /// `z` lists z(1)..z(nn), `p0` lists p0(1)..p0(nn−1) and `scratch`
    /// must have at least [`scratch_count`]`(nn)` qubits.
    pub fn new(z: &[usize], p0: &[usize], scratch: &[usize]) -> Self {
        let nn = z.len();
        assert_eq!(p0.len() + 1, nn, "need nn-1 propagate bits");
        let mut x = BTreeMap::new();
        let mut it = scratch.iter();
        if nn >= 4 {
            for t in 1..flog(nn) {
                for m in 1..nn >> t {
                    x.insert((t, m), *it.next().expect("not enough scratch qubits"));
                }
            }
        }
        let mut zz = vec![usize::MAX];
        zz.extend_from_slice(z);
        let mut pp = vec![usize::MAX];
        pp.extend_from_slice(p0);
        Lookahead { z: zz, p0: pp, x }
    }

    fn p(&self, t: u32, m: usize) -> usize {
        if t == 0 {
            self.p0[m]
        } else {
            self.x[&(t, m)]
        }
    }

    /// Gates of the network restricted to the first `nn` positions. Using a
    /// smaller `nn` than the instance was built for reuses the same qubits,
    /// which is how the lookahead adder erases its carries.
    pub fn gates(&self, nn: usize) -> Vec<Gate> {
        assert!(nn < self.z.len(), "network built for fewer positions");
        if nn < 2 {
            return Vec::new();
        }
        let k = flog(nn);
        let z = |i: usize| self.z[i];
        let p_round = |t: u32| -> Vec<Gate> {
            (1..nn >> t)
                .map(|m| Gate::ccnot(self.p(t - 1, 2 * m), self.p(t - 1, 2 * m + 1), self.p(t, m)))
                .collect()
        };
        let mut seq = Vec::new();
        for t in 1..=k {
            if t < k {
                seq.extend(p_round(t));
            }
            let (s, h) = (1usize << t, 1usize << (t - 1));
            for m in 0..nn >> t {
                seq.push(Gate::ccnot(z(s * m + h), self.p(t - 1, 2 * m + 1), z(s * m + s)));
            }
        }
        let top = flog(2 * nn / 3);
        for t in (1..=top).rev() {
            let (s, h) = (1usize << t, 1usize << (t - 1));
            for m in 1..=(nn - h) / s {
                seq.push(Gate::ccnot(z(s * m), self.p(t - 1, 2 * m), z(s * m + h)));
            }
        }
        for t in (1..k).rev() {
            let mut r = p_round(t);
            r.reverse();
            seq.extend(r);
        }
        seq
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsim::{run_packed, Circuit};

    /// Reference carries by plain rippling.
    fn carries(g: &[bool], p: &[bool]) -> Vec<bool> {
        let mut c = vec![false; g.len() + 1];
        for i in 0..g.len() {
            c[i + 1] = g[i] || (p[i] && c[i]);
        }
        c
    }

    #[test]
    fn prefix_carries_for_many_sizes() {
        for nn in 2..=9usize {
            // qubits: z(1..=nn), p0(1..nn), scratch
            let z: Vec<usize> = (0..nn).collect();
            let p0: Vec<usize> = (nn..2 * nn - 1).collect();
            let sc: Vec<usize> = (2 * nn - 1..2 * nn - 1 + scratch_count(nn)).collect();
            let la = Lookahead::new(&z, &p0, &sc);
            let c = Circuit::from_gates(2 * nn - 1 + sc.len(), la.gates(nn)).unwrap();
            // generate/propagate pairs never both set
            for gm in 0..1u64 << nn {
                for pm in 0..1u64 << (nn - 1) {
                    let g: Vec<bool> = (0..nn).map(|i| gm >> i & 1 == 1).collect();
                    let mut p = vec![false];
                    p.extend((0..nn - 1).map(|i| pm >> i & 1 == 1));
                    if (1..nn).any(|i| g[i] && p[i]) {
                        continue;
                    }
                    let input = gm | pm << nn;
                    let out = run_packed(&c, input).unwrap();
                    let want = carries(&g, &p);
                    for i in 1..=nn {
                        assert_eq!(out >> (i - 1) & 1 == 1, want[i], "nn={nn} g={gm:b} p={pm:b} i={i}");
                    }
                    assert_eq!(out >> nn, input >> nn, "propagates or scratch disturbed");
                }
            }
        }
    }

    #[test]
    fn scratch_matches_qubit_map() {
        for nn in 1..40 {
            let z: Vec<usize> = (0..nn).collect();
            let p0: Vec<usize> = (0..nn.saturating_sub(1)).collect();
            let sc: Vec<usize> = (0..scratch_count(nn)).collect();
            let la = Lookahead::new(&z, &p0, &sc);
            assert_eq!(la.x.len(), scratch_count(nn));
        }
    }
}
