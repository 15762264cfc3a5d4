//! Deterministic discrete-event evaluation of a [`Program`].
//!
//! Operations are admitted in index order. On every resource it needs, an
//! operation takes the unit that became idle most recently among those idle
//! by the time it could start, or else the unit that frees up first; ties go
//! to the lowest unit index. Keeping a serial chain on one unit leaves the
//! others to whoever comes next. The units stay busy for one EPR creation. Its teleport completes
//! once the pair exists and its dependencies are done, plus the classical
//! message and any trailing local work.

use crate::program::Program;

/// When the EPR pair for an operation may start being made.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EprPolicy {
    /// As soon as the resources are free, independent of the data.
    Prefetch,
    /// Only once the operation's dependencies have completed.
    OnDemand,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Schedule {
    pub start: Vec<f64>,
    pub done: Vec<f64>,
    pub makespan: f64,
}

impl Schedule {
    /// Largest number of operations whose EPR creation overlaps in time.
    pub fn peak_concurrency(&self, epr: f64) -> usize {
        let mut events: Vec<(f64, i32)> = Vec::with_capacity(2 * self.start.len());
        for &s in &self.start {
            events.push((s, 1));
            events.push((s + epr, -1));
        }
        events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut cur = 0i32;
        let mut peak = 0i32;
        for (_, d) in events {
            cur += d;
            peak = peak.max(cur);
        }
        peak as usize
    }
}

pub fn simulate(program: &Program, epr: f64, classical: f64, policy: EprPolicy) -> Schedule {
    let mut free: Vec<Vec<f64>> = program.capacity.iter().map(|&c| vec![0.0; c as usize]).collect();
    let mut start = Vec::with_capacity(program.len());
    let mut done: Vec<f64> = Vec::with_capacity(program.len());
    for (i, op) in program.ops.iter().enumerate() {
        let ready = op
            .deps
            .iter()
            .map(|&d| {
                assert!(d < i, "operation {i} depends on later operation {d}");
                done[d]
            })
            .fold(0.0, f64::max);
        let floor = match policy {
            EprPolicy::Prefetch => 0.0,
            EprPolicy::OnDemand => ready,
        };
        let picks: Vec<(usize, usize)> = op
            .resources
            .iter()
            .map(|&r| {
                (r, pick_unit(&free[r], floor))
            })
            .collect();
        let s = picks.iter().map(|&(r, u)| free[r][u]).fold(floor, f64::max);
        for &(r, u) in &picks {
            free[r][u] = s + epr;
        }
        start.push(s);
        done.push(ready.max(s + epr) + classical + op.after);
    }
    let makespan = done.iter().copied().fold(0.0, f64::max);
    Schedule { start, done, makespan }
}

fn pick_unit(free: &[f64], floor: f64) -> usize {
    let idle = free
        .iter()
        .enumerate()
        .filter(|(_, &f)| f <= floor)
        .max_by(|a, b| a.1.total_cmp(b.1).then(b.0.cmp(&a.0)));
    let first_free = || {
        free.iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1).then(a.0.cmp(&b.0)))
            .expect("resource without units")
    };
    idle.unwrap_or_else(first_free).0
}

/// EPR creation steps needed if every pair can be made in advance: the
/// busiest resource's uses divided by its units, rounded up.
pub fn load(program: &Program) -> u64 {
    let mut uses = vec![0u64; program.capacity.len()];
    for op in &program.ops {
        for &r in &op.resources {
            uses[r] += 1;
        }
    }
    uses.iter().zip(&program.capacity).map(|(&u, &c)| u.div_ceil(c as u64)).max().unwrap_or(0)
}
