//! Closed-form topology metrics against brute force on explicit graphs.

use std::collections::VecDeque;

use multinet::{Topology, TopologyKind};

/// Edge multiset of a point-to-point topology; `None` for the buses.
fn edges(kind: TopologyKind, n: usize) -> Option<Vec<(usize, usize)>> {
    let mut e = Vec::new();
    match kind {
        TopologyKind::Line => e.extend((1..n).map(|i| (i - 1, i))),
        TopologyKind::Fully | TopologyKind::TwoFully => {
            let copies = if kind == TopologyKind::Fully { 1 } else { 2 };
            for a in 0..n {
                for b in a + 1..n {
                    for _ in 0..copies {
                        e.push((a, b));
                    }
                }
            }
        }
        _ => return None,
    }
    Some(e)
}

fn bfs(n: usize, e: &[(usize, usize)], src: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in e {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut dist = vec![usize::MAX; n];
    dist[src] = 0;
    let mut q = VecDeque::from([src]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    dist
}

fn min_bisection(n: usize, e: &[(usize, usize)]) -> usize {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == n / 2)
        .map(|s| e.iter().filter(|&&(a, b)| (s >> a & 1) != (s >> b & 1)).count())
        .min()
        .unwrap()
}

#[test]
fn point_to_point_metrics_match_brute_force() {
    for kind in [TopologyKind::Line, TopologyKind::Fully, TopologyKind::TwoFully] {
        for n in 2..=10 {
            let e = edges(kind, n).unwrap();
            let m = Topology::new(kind, n).unwrap().metrics();
            let all: Vec<Vec<usize>> = (0..n).map(|s| bfs(n, &e, s)).collect();
            let diameter = all.iter().flatten().copied().max().unwrap();
            let total: usize = all.iter().flatten().sum();
            let avg = total as f64 / (n * (n - 1)) as f64;
            assert_eq!(m.diameter as usize, diameter, "{kind} {n}");
            assert_eq!(m.total_links as usize, e.len(), "{kind} {n}");
            if kind == TopologyKind::Line {
                assert_eq!(m.bisection as usize, min_bisection(n, &e));
            } else if n >= 3 {
                // the fully connected bisection counts the transfers the
                // transceivers can carry, which the wiring always exceeds
                assert!(m.bisection as usize <= min_bisection(n, &e), "{kind} {n}");
            }
            assert!((m.avg_distance - avg).abs() < 1e-12, "{kind} {n}: {} vs {avg}", m.avg_distance);
        }
    }
}

#[test]
fn buses_are_single_hop() {
    for n in [2, 16, 1024] {
        let b = Topology::new(TopologyKind::Bus, n).unwrap().metrics();
        assert_eq!((b.degree, b.diameter, b.bisection, b.total_links), (1, 1, 1, 1));
        let b2 = Topology::new(TopologyKind::TwoBus, n).unwrap().metrics();
        assert_eq!((b2.degree, b2.bisection, b2.total_links), (2, 2, 2));
    }
}

#[test]
fn line_and_fully_examples() {
    let l = Topology::new(TopologyKind::Line, 16).unwrap().metrics();
    assert_eq!((l.degree, l.diameter, l.bisection), (2, 15, 1));
    assert!((l.avg_distance - 17.0 / 3.0).abs() < 1e-12);
    let f = Topology::new(TopologyKind::Fully, 16).unwrap().metrics();
    assert_eq!(f.total_links, 120);
    assert_eq!(f.bisection, 15);
}
