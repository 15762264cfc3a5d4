//! Concurrency-aware scheduling with class-weighted gate durations.
//!
//! A Toffoli-class gate outlasts any number of two-qubit gates, which in turn
//! outlast any number of NOTs. Time is therefore a lexicographic triple
//! (ccnot, cnot, not) and is stored as a single integer with the three
//! components in widely separated bit fields. The makespan of a schedule read
//! back as a triple is its depth: the number of Toffoli times on the critical
//! path, then the two-qubit times, then the NOT times.
//!
//! [`schedule`] places every gate as soon as its operands are free (program
//! order, so ties go to the lowest gate index), then runs a balancing pass
//! that slides gates with slack to the least loaded start time they can
//! reach without moving any later gate past the makespan. The pass never
//! changes the depth, only the peak concurrency. [`schedule_capped`] is a
//! list scheduler that never runs more than `cap` gates at once, picking the
//! gate with the longest remaining path first.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use revsim::{Circuit, CostTriple, GateKind};

use crate::model::{check_legal, ArchModel};
use crate::ArchError;

const CC: u128 = 1 << 80;
const CX: u128 = 1 << 40;
const NT: u128 = 1;
const FIELD: u128 = (1 << 40) - 1;

/// How many candidate start times the balancing pass looks at per gate.
const BALANCE_CANDIDATES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GateClass {
    /// NOT and the other single-qubit gates.
    Not,
    /// CNOT, SWAP and the controlled-√X pair: one two-qubit gate time.
    Two,
    /// CCNOT and Fredkin.
    Three,
}

impl GateClass {
    pub fn of(kind: GateKind) -> Self {
        match kind {
            GateKind::Not | GateKind::H => GateClass::Not,
            GateKind::Ccnot | GateKind::Fredkin => GateClass::Three,
            GateKind::Cnot | GateKind::Swap | GateKind::SqrtX | GateKind::SqrtXDag => GateClass::Two,
        }
    }

    fn ticks(self) -> u128 {
        match self {
            GateClass::Not => NT,
            GateClass::Two => CX,
            GateClass::Three => CC,
        }
    }
}

fn split(t: u128) -> (u64, u64, u64) {
    ((t >> 80) as u64, ((t >> 40) & FIELD) as u64, (t & FIELD) as u64)
}

fn durations(c: &Circuit) -> Vec<u128> {
    c.gates().iter().map(|g| GateClass::of(g.kind()).ticks()).collect()
}

/// Distinct predecessors of every gate: the last earlier gate on each operand.
fn predecessors(c: &Circuit) -> Vec<Vec<usize>> {
    let mut last: Vec<Option<usize>> = vec![None; c.width()];
    c.gates()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut p: Vec<usize> = g.qubits().iter().filter_map(|&q| last[q]).collect();
            p.sort_unstable();
            p.dedup();
            for &q in g.qubits() {
                last[q] = Some(i);
            }
            p
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ScheduledCircuit {
    circuit: Circuit,
    start: Vec<u128>,
    slot: Vec<usize>,
    slots: Vec<Vec<usize>>,
    depth: CostTriple,
}

impl ScheduledCircuit {
    fn build(circuit: Circuit, start: Vec<u128>) -> Self {
        let dur = durations(&circuit);
        let times: BTreeSet<u128> = start.iter().copied().collect();
        let index: BTreeMap<u128, usize> = times.iter().enumerate().map(|(k, &t)| (t, k)).collect();
        let slot: Vec<usize> = start.iter().map(|t| index[t]).collect();
        let mut slots = vec![Vec::new(); times.len()];
        for (i, &s) in slot.iter().enumerate() {
            slots[s].push(i);
        }
        let makespan = start.iter().zip(&dur).map(|(s, d)| s + d).max().unwrap_or(0);
        let (cc, cx, nt) = split(makespan);
        let peak = peak_overlap(start.iter().zip(&dur).map(|(&s, &d)| (s, s + d)));
        let depth = CostTriple::new(cc as f64, cx as f64, nt as f64)
            .with_concurrency(peak as f64)
            .with_space(circuit.width() as f64);
        ScheduledCircuit { circuit, start, slot, slots, depth }
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// Depth triple with peak concurrency and qubit count.
    pub fn depth(&self) -> CostTriple {
        self.depth
    }

    pub fn concurrency(&self) -> usize {
        self.depth.concurrency as usize
    }

    /// Index of the time slot (distinct start time) gate `i` starts in.
    pub fn slot_of(&self, i: usize) -> usize {
        self.slot[i]
    }

    /// Gate indices grouped by start time, earliest first.
    pub fn slots(&self) -> &[Vec<usize>] {
        &self.slots
    }

    /// Start time of gate `i` as a (ccnot, cnot, not) triple.
    pub fn start(&self, i: usize) -> (u64, u64, u64) {
        split(self.start[i])
    }

    /// Verifies that no qubit is an operand of two gates whose execution
    /// intervals overlap.
    pub fn check_disjoint(&self) -> Result<(), ArchError> {
        let dur = durations(&self.circuit);
        let mut per_qubit: Vec<Vec<(u128, u128, usize)>> = vec![Vec::new(); self.circuit.width()];
        for (i, g) in self.circuit.gates().iter().enumerate() {
            for &q in g.qubits() {
                per_qubit[q].push((self.start[i], self.start[i] + dur[i], i));
            }
        }
        for (qubit, mut uses) in per_qubit.into_iter().enumerate() {
            uses.sort_unstable();
            for w in uses.windows(2) {
                if w[1].0 < w[0].1 {
                    return Err(ArchError::Overlap { qubit, first: w[0].2, second: w[1].2 });
                }
            }
        }
        Ok(())
    }

    /// One line per slot listing the gate indices that start in it.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for gates in &self.slots {
            let line: Vec<String> = gates.iter().map(|i| i.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

fn peak_overlap(intervals: impl Iterator<Item = (u128, u128)>) -> usize {
    let mut ev: Vec<(u128, i8)> = Vec::new();
    for (s, e) in intervals {
        ev.push((s, 1));
        ev.push((e, -1));
    }
    // ends sort before starts at the same instant
    ev.sort_unstable();
    let (mut cur, mut peak) = (0i64, 0i64);
    for (_, d) in ev {
        cur += d as i64;
        peak = peak.max(cur);
    }
    peak as usize
}

/// Length of the longest dependency chain, as a triple.
pub fn critical_path(c: &Circuit) -> CostTriple {
    let dur = durations(c);
    let preds = predecessors(c);
    let mut finish = vec![0u128; c.len()];
    for i in 0..c.len() {
        finish[i] = dur[i] + preds[i].iter().map(|&p| finish[p]).max().unwrap_or(0);
    }
    let (cc, cx, nt) = split(finish.into_iter().max().unwrap_or(0));
    CostTriple::new(cc as f64, cx as f64, nt as f64)
}

/// Schedules a circuit that must be legal on `arch`.
pub fn schedule(c: &Circuit, arch: &ArchModel) -> Result<ScheduledCircuit, ArchError> {
    check_legal(c, arch)?;
    Ok(schedule_unchecked(c))
}

/// As-soon-as-possible placement followed by the balancing pass.
pub fn schedule_unchecked(c: &Circuit) -> ScheduledCircuit {
    let dur = durations(c);
    let gates = c.gates();

    let mut free = vec![0u128; c.width()];
    let asap: Vec<u128> = gates
        .iter()
        .zip(&dur)
        .map(|(g, &d)| {
            let s = g.qubits().iter().map(|&q| free[q]).max().unwrap_or(0);
            for &q in g.qubits() {
                free[q] = s + d;
            }
            s
        })
        .collect();
    let makespan = asap.iter().zip(&dur).map(|(s, d)| s + d).max().unwrap_or(0);

    // latest start that still lets every later gate finish by the makespan
    let mut next = vec![makespan; c.width()];
    let mut latest = vec![0u128; gates.len()];
    for i in (0..gates.len()).rev() {
        let f = gates[i].qubits().iter().map(|&q| next[q]).min().unwrap_or(makespan);
        latest[i] = f - dur[i];
        for &q in gates[i].qubits() {
            next[q] = latest[i];
        }
    }

    let candidates: BTreeSet<u128> = asap.iter().copied().collect();
    let longest = dur.iter().copied().max().unwrap_or(0);
    let mut placed: BTreeMap<u128, Vec<u128>> = BTreeMap::new();
    let mut free = vec![0u128; c.width()];
    let mut start = Vec::with_capacity(gates.len());
    for (i, g) in gates.iter().enumerate() {
        let d = dur[i];
        let lo = g.qubits().iter().map(|&q| free[q]).max().unwrap_or(0);
        let mut best = (load(&placed, longest, lo, lo + d), lo);
        if latest[i] > lo {
            for &s in candidates.range(lo + 1..=latest[i]).take(BALANCE_CANDIDATES) {
                let l = load(&placed, longest, s, s + d);
                if l < best.0 {
                    best = (l, s);
                }
            }
        }
        let s = best.1;
        placed.entry(s).or_default().push(s + d);
        for &q in g.qubits() {
            free[q] = s + d;
        }
        start.push(s);
    }
    ScheduledCircuit::build(c.clone(), start)
}

/// Peak number of already placed gates running at some instant of [s, e).
fn load(placed: &BTreeMap<u128, Vec<u128>>, longest: u128, s: u128, e: u128) -> usize {
    let from = s.saturating_sub(longest);
    let mut live = Vec::new();
    for (&a, ends) in placed.range(from..e) {
        for &b in ends {
            if b > s {
                live.push((a.max(s), b.min(e)));
            }
        }
    }
    peak_overlap(live.into_iter())
}

/// List scheduling with at most `cap` gates in flight. Ready gates are taken
/// by longest remaining weighted path, then lowest index.
pub fn schedule_capped(c: &Circuit, cap: usize) -> Result<ScheduledCircuit, ArchError> {
    if cap == 0 {
        return Err(ArchError::ZeroCap);
    }
    let n = c.len();
    let dur = durations(c);
    let preds = predecessors(c);
    let mut succ = vec![Vec::new(); n];
    for (j, p) in preds.iter().enumerate() {
        for &i in p {
            succ[i].push(j);
        }
    }
    let mut height = vec![0u128; n];
    for i in (0..n).rev() {
        height[i] = dur[i] + succ[i].iter().map(|&j| height[j]).max().unwrap_or(0);
    }
    let mut waiting: Vec<usize> = preds.iter().map(Vec::len).collect();
    let mut ready: BTreeSet<(Reverse<u128>, usize)> =
        (0..n).filter(|&i| waiting[i] == 0).map(|i| (Reverse(height[i]), i)).collect();
    let mut running: BinaryHeap<Reverse<(u128, usize)>> = BinaryHeap::new();
    let mut start = vec![0u128; n];
    let mut t = 0u128;
    loop {
        while running.len() < cap {
            let Some((_, i)) = ready.pop_first() else { break };
            start[i] = t;
            running.push(Reverse((t + dur[i], i)));
        }
        let Some(&Reverse((next, _))) = running.peek() else { break };
        t = next;
        while let Some(&Reverse((f, i))) = running.peek() {
            if f != t {
                break;
            }
            running.pop();
            for &j in &succ[i] {
                waiting[j] -= 1;
                if waiting[j] == 0 {
                    ready.insert((Reverse(height[j]), j));
                }
            }
        }
    }
    Ok(ScheduledCircuit::build(c.clone(), start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsim::Gate;

    #[test]
    fn single_gate() {
        for g in [Gate::not(0), Gate::cnot(0, 1), Gate::ccnot(0, 1, 2)] {
            let c = Circuit::from_gates(3, vec![g]).unwrap();
            let s = schedule_unchecked(&c);
            let cls = GateClass::of(g.kind());
            let expect = match cls {
                GateClass::Not => (0.0, 0.0, 1.0),
                GateClass::Two => (0.0, 1.0, 0.0),
                GateClass::Three => (1.0, 0.0, 0.0),
            };
            assert_eq!(s.depth().times(), expect);
            assert_eq!(s.concurrency(), 1);
            assert_eq!(s.dump(), "0\n");
        }
    }

    #[test]
    fn empty_circuit() {
        let s = schedule_unchecked(&Circuit::new(2));
        assert_eq!(s.depth().times(), (0.0, 0.0, 0.0));
        assert_eq!(s.concurrency(), 0);
        assert!(s.slots().is_empty());
    }

    #[test]
    fn lexicographic_classes() {
        // a Toffoli on one line runs beside a long CNOT chain on another
        let mut g = vec![Gate::ccnot(0, 1, 2)];
        for _ in 0..7 {
            g.push(Gate::cnot(3, 4));
        }
        let c = Circuit::from_gates(5, g).unwrap();
        let s = schedule_unchecked(&c);
        assert_eq!(s.depth().times(), (1.0, 0.0, 0.0));
        assert_eq!(s.concurrency(), 2);
        s.check_disjoint().unwrap();
    }

    #[test]
    fn capped_respects_cap() {
        let g: Vec<Gate> = (0..6).map(Gate::not).collect();
        let c = Circuit::from_gates(6, g).unwrap();
        assert_eq!(schedule_unchecked(&c).depth().times(), (0.0, 0.0, 1.0));
        let s = schedule_capped(&c, 4).unwrap();
        assert_eq!(s.depth().times(), (0.0, 0.0, 2.0));
        assert_eq!(s.concurrency(), 4);
        assert_eq!(schedule_capped(&c, 0).unwrap_err(), ArchError::ZeroCap);
    }

    #[test]
    fn illegal_input_rejected() {
        let c = Circuit::from_gates(3, vec![Gate::cnot(0, 2)]).unwrap();
        assert!(schedule(&c, &ArchModel::ntc_identity(3)).is_err());
        assert!(schedule(&c, &ArchModel::Ac).is_ok());
    }
}
