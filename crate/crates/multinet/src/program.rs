//! Communication programs: the remote operations of a distributed adder,
//! their data dependencies and the network resources each one occupies.
//!
//! Every operation needs one EPR pair. The resources it holds while that
//! pair is created depend on the interconnect:
//!
//! * bus, 2bus: the shared medium, with one or two lanes;
//! * line: the link between the two neighbours;
//! * fully, 2fully: the transceivers of both endpoint nodes.
//!
//! Nodes are numbered by bit slice, so the cut between slices j−1 and j is
//! "boundary j".

use crate::{MultinetError, TopologyKind};

#[derive(Clone, Debug, PartialEq)]
pub struct Op {
    /// Resources held while the EPR pair is created.
    pub resources: Vec<usize>,
    /// Operations whose completion this one waits for.
    pub deps: Vec<usize>,
    /// Extra work after the teleport itself, in the program's time unit.
    pub after: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Program {
    /// Units available per resource.
    pub capacity: Vec<u32>,
    pub ops: Vec<Op>,
    topology: TopologyKind,
}

impl Program {
    /// A program on `nodes` nodes with no operations yet.
    pub fn new(topology: TopologyKind, nodes: usize, transceivers: u32) -> Result<Self, MultinetError> {
        if nodes < 2 {
            return Err(MultinetError::TooFewNodes(nodes));
        }
        let capacity = match topology {
            TopologyKind::Bus | TopologyKind::TwoBus => vec![topology.bus_lanes().unwrap_or(1)],
            TopologyKind::Line => vec![1; nodes - 1],
            TopologyKind::Fully | TopologyKind::TwoFully => vec![transceivers; nodes],
        };
        Ok(Program { capacity, ops: Vec::new(), topology })
    }

    pub fn topology(&self) -> TopologyKind {
        self.topology
    }

    pub fn nodes(&self) -> usize {
        match self.topology {
            TopologyKind::Line => self.capacity.len() + 1,
            TopologyKind::Fully | TopologyKind::TwoFully => self.capacity.len(),
            // the bus does not record its node count
            _ => usize::MAX,
        }
    }

    /// Resources used by a transfer between nodes `a` and `b`. On the line
    /// only neighbours talk to each other.
    pub fn route(&self, a: usize, b: usize) -> Vec<usize> {
        debug_assert_ne!(a, b);
        match self.topology {
            TopologyKind::Bus | TopologyKind::TwoBus => vec![0],
            TopologyKind::Line => {
                debug_assert_eq!(a.abs_diff(b), 1, "line transfers are between neighbours");
                vec![a.min(b)]
            }
            TopologyKind::Fully | TopologyKind::TwoFully => vec![a, b],
        }
    }

    /// Appends a transfer between `a` and `b` and returns its index.
    pub fn push(&mut self, a: usize, b: usize, deps: Vec<usize>) -> usize {
        let resources = self.route(a, b);
        self.ops.push(Op { resources, deps, after: 0.0 });
        self.ops.len() - 1
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

/// A fully serial chain that walks the slices upwards and back down again,
/// `per_boundary` transfers across each cut on the way up and `back` on the
/// way down.
pub fn sweep_chain(
    topology: TopologyKind,
    nodes: usize,
    transceivers: u32,
    per_boundary: usize,
    back: usize,
) -> Result<Program, MultinetError> {
    let mut p = Program::new(topology, nodes, transceivers)?;
    let mut prev: Option<usize> = None;
    let mut step = |p: &mut Program, a: usize, b: usize| {
        let id = p.push(a, b, prev.into_iter().collect());
        prev = Some(id);
    };
    for j in 1..nodes {
        for _ in 0..per_boundary {
            step(&mut p, j - 1, j);
        }
    }
    for j in (1..nodes).rev() {
        for _ in 0..back {
            step(&mut p, j, j - 1);
        }
    }
    Ok(p)
}

/// Data teleports of the VBE ripple: the carry travels up through every
/// slice and the uncompute travels back down, one teleport per cut each way.
pub fn vbe_teledata(topology: TopologyKind, nodes: usize, transceivers: u32) -> Result<Program, MultinetError> {
    sweep_chain(topology, nodes, transceivers, 1, 1)
}

/// Gate teleports of the VBE ripple: seven remote gates per cut, all on the
/// carry chain.
pub fn vbe_telegate(topology: TopologyKind, nodes: usize, transceivers: u32) -> Result<Program, MultinetError> {
    sweep_chain(topology, nodes, transceivers, 7, 0)
}

/// Transfers of a CDKM-style ripple: every cut sees a serial group of
/// `per_boundary` transfers (the majority pass moving up and the unmajority
/// pass coming back), and the group at cut j+1 can start once the first
/// `handoff` transfers at cut j have completed.
pub fn boundary_groups(
    topology: TopologyKind,
    nodes: usize,
    transceivers: u32,
    per_boundary: usize,
    handoff: usize,
) -> Result<Program, MultinetError> {
    assert!(per_boundary >= 1 && (1..=per_boundary).contains(&handoff));
    let mut p = Program::new(topology, nodes, transceivers)?;
    let mut hook: Option<usize> = None;
    for j in 1..nodes {
        let first = p.len();
        for i in 0..per_boundary {
            let deps = if i == 0 { hook.into_iter().collect() } else { vec![first + i - 1] };
            p.push(j - 1, j, deps);
        }
        hook = Some(first + handoff - 1);
    }
    Ok(p)
}

/// Data teleports of the CDKM ripple: six per cut (the carry and one operand
/// move across and back during the majority pass, and again during the
/// unmajority pass); the next cut starts after two of them.
pub fn cdkm_teledata(topology: TopologyKind, nodes: usize, transceivers: u32) -> Result<Program, MultinetError> {
    boundary_groups(topology, nodes, transceivers, 6, 2)
}

/// Gate teleports of the CDKM ripple used for EPR accounting: nine remote
/// gates per cut.
pub fn cdkm_telegate(topology: TopologyKind, nodes: usize, transceivers: u32) -> Result<Program, MultinetError> {
    boundary_groups(topology, nodes, transceivers, 9, 3)
}

/// One step of a layered lookahead program.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    /// A Toffoli whose controls live on two other nodes: both controls are
    /// teleported in, then both are sent back.
    ThreeNode,
    /// A Toffoli with one remote control: in, then back.
    TwoNode,
    /// `count` operands arrive for this step; their return trips overlap
    /// later steps and are not modelled.
    Incoming { count: usize },
}

/// A chain of layers; every layer starts when the previous one is done. The
/// target of layer i is node i mod N and its operands come from the next
/// nodes along, so the line, which only joins neighbours, is rejected.
pub fn layered(
    topology: TopologyKind,
    nodes: usize,
    transceivers: u32,
    layers: &[Layer],
) -> Result<Program, MultinetError> {
    if nodes < 3 {
        return Err(MultinetError::TooFewNodes(nodes));
    }
    if topology == TopologyKind::Line {
        return Err(MultinetError::Unsupported { adder: crate::DistAdder::Qcla, topology });
    }
    let mut p = Program::new(topology, nodes, transceivers)?;
    let mut frontier: Vec<usize> = Vec::new();
    for (i, layer) in layers.iter().enumerate() {
        let t = i % nodes;
        let src = |s: usize| (t + 1 + s % (nodes - 1)) % nodes;
        frontier = match *layer {
            Layer::ThreeNode => {
                let a = p.push(src(0), t, frontier.clone());
                let b = p.push(src(1), t, frontier);
                let ra = p.push(t, src(0), vec![a, b]);
                let rb = p.push(t, src(1), vec![a, b]);
                vec![ra, rb]
            }
            Layer::TwoNode => {
                let a = p.push(src(0), t, frontier);
                vec![p.push(t, src(0), vec![a])]
            }
            Layer::Incoming { count } => (0..count).map(|s| p.push(src(s), t, frontier.clone())).collect(),
        };
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn op_counts() {
        assert_eq!(vbe_teledata(TopologyKind::Line, 16, 2).unwrap().len(), 30);
        assert_eq!(vbe_telegate(TopologyKind::Bus, 16, 1).unwrap().len(), 105);
        assert_eq!(cdkm_teledata(TopologyKind::Fully, 16, 1).unwrap().len(), 90);
    }

    #[test]
    fn deps_point_backwards() {
        let layers = [Layer::ThreeNode, Layer::TwoNode, Layer::Incoming { count: 3 }, Layer::ThreeNode];
        let p = layered(TopologyKind::TwoFully, 8, 2, &layers).unwrap();
        for (i, op) in p.ops.iter().enumerate() {
            assert!(op.deps.iter().all(|&d| d < i));
            assert_eq!(op.resources.len(), 2);
            assert_ne!(op.resources[0], op.resources[1]);
        }
    }

    #[test]
    fn line_routes_on_links() {
        let p = Program::new(TopologyKind::Line, 4, 2).unwrap();
        assert_eq!(p.route(2, 1), vec![1]);
        assert_eq!(p.capacity.len(), 3);
        assert_eq!(p.nodes(), 4);
    }
}
