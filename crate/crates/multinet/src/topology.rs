//! The five interconnects and their structural metrics.

use std::fmt;
use std::str::FromStr;

use crate::MultinetError;

/// `Bus`: one shared medium. `TwoBus`: two shared media, each node on both.
/// `Line`: nearest-neighbour links. `Fully`: a link between every pair of
/// nodes, one transceiver per node. `TwoFully`: the same with two
/// transceivers per node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TopologyKind {
    Bus,
    TwoBus,
    Line,
    Fully,
    TwoFully,
}

impl TopologyKind {
    pub const ALL: [TopologyKind; 5] = [
        TopologyKind::Bus,
        TopologyKind::TwoBus,
        TopologyKind::Line,
        TopologyKind::Fully,
        TopologyKind::TwoFully,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TopologyKind::Bus => "bus",
            TopologyKind::TwoBus => "2bus",
            TopologyKind::Line => "line",
            TopologyKind::Fully => "fully",
            TopologyKind::TwoFully => "2fully",
        }
    }

    /// Transceiver qubits per node.
    pub fn transceivers(self) -> u32 {
        match self {
            TopologyKind::Bus | TopologyKind::Fully => 1,
            TopologyKind::TwoBus | TopologyKind::Line | TopologyKind::TwoFully => 2,
        }
    }

    /// Simultaneous transfers the shared medium carries (buses only).
    pub fn bus_lanes(self) -> Option<u32> {
        match self {
            TopologyKind::Bus => Some(1),
            TopologyKind::TwoBus => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for TopologyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TopologyKind {
    type Err = MultinetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        let s = match s.as_str() {
            "linear" => "line",
            "fully-connected" => "fully",
            other => other,
        };
        TopologyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| MultinetError::UnknownTopology(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Topology {
    pub kind: TopologyKind,
    pub nodes: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TopoMetrics {
    pub degree: u64,
    pub diameter: u64,
    /// Mean hop count over distinct node pairs.
    pub avg_distance: f64,
    pub bisection: u64,
    pub total_links: u64,
}

impl Topology {
    pub fn new(kind: TopologyKind, nodes: usize) -> Result<Self, MultinetError> {
        if nodes < 2 {
            return Err(MultinetError::TooFewNodes(nodes));
        }
        Ok(Topology { kind, nodes })
    }

    pub fn metrics(&self) -> TopoMetrics {
        let n = self.nodes as u64;
        match self.kind {
            TopologyKind::Bus => TopoMetrics { degree: 1, diameter: 1, avg_distance: 1.0, bisection: 1, total_links: 1 },
            TopologyKind::TwoBus => TopoMetrics { degree: 2, diameter: 1, avg_distance: 1.0, bisection: 2, total_links: 2 },
            TopologyKind::Line => TopoMetrics {
                degree: 2,
                diameter: n - 1,
                avg_distance: (n + 1) as f64 / 3.0,
                bisection: 1,
                total_links: n - 1,
            },
            TopologyKind::Fully => TopoMetrics {
                degree: 1,
                diameter: 1,
                avg_distance: 1.0,
                bisection: n - 1,
                total_links: n * (n - 1) / 2,
            },
            TopologyKind::TwoFully => TopoMetrics {
                degree: 2,
                diameter: 1,
                avg_distance: 1.0,
                bisection: 2 * (n - 1),
                total_links: n * (n - 1),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in TopologyKind::ALL {
            assert_eq!(k.name().parse::<TopologyKind>().unwrap(), k);
        }
        assert_eq!("linear".parse::<TopologyKind>().unwrap(), TopologyKind::Line);
        assert!("ring".parse::<TopologyKind>().is_err());
    }

    #[test]
    fn needs_two_nodes() {
        assert_eq!(Topology::new(TopologyKind::Line, 1), Err(MultinetError::TooFewNodes(1)));
    }
}
