//! Adders, communication methods, node shapes and operation times.

use std::fmt;
use std::str::FromStr;

use crate::{MultinetError, TopologyKind};

/// The adders that are distributed: two ripple-carry designs and the
/// carry-lookahead adder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DistAdder {
    Vbe,
    Cdkm,
    Qcla,
}

impl DistAdder {
    pub const ALL: [DistAdder; 3] = [DistAdder::Vbe, DistAdder::Cdkm, DistAdder::Qcla];

    pub fn name(self) -> &'static str {
        match self {
            DistAdder::Vbe => "VBE",
            DistAdder::Cdkm => "CDKM",
            DistAdder::Qcla => "QCLA",
        }
    }

    /// Label used when classifying the fastest adder.
    pub fn label(self) -> &'static str {
        match self {
            DistAdder::Vbe => "VBE",
            DistAdder::Cdkm => "CDKM",
            DistAdder::Qcla => "carry-lookahead",
        }
    }

    pub fn supports(self, topology: TopologyKind) -> bool {
        !(self == DistAdder::Qcla && topology == TopologyKind::Line)
    }

    pub fn check(self, topology: TopologyKind, n: usize) -> Result<(), MultinetError> {
        if !self.supports(topology) {
            return Err(MultinetError::Unsupported { adder: self, topology });
        }
        let ok = match self {
            DistAdder::Qcla => n >= 4 && n.is_power_of_two(),
            _ => n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(MultinetError::Width { adder: self, n })
        }
    }

    pub(crate) fn model(self) -> modexp::AdderModel {
        match self {
            DistAdder::Vbe => modexp::AdderModel::Vbe,
            DistAdder::Cdkm => modexp::AdderModel::Cdkm,
            DistAdder::Qcla => modexp::AdderModel::Qcla,
        }
    }
}

impl fmt::Display for DistAdder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DistAdder {
    type Err = MultinetError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "vbe" => Ok(DistAdder::Vbe),
            "cdkm" => Ok(DistAdder::Cdkm),
            "qcla" | "cla" | "lookahead" | "carry-lookahead" => Ok(DistAdder::Qcla),
            _ => Err(MultinetError::UnknownAdder(s.to_string())),
        }
    }
}

/// How a gate between qubits on different nodes is carried out.
///
/// `Baseline` is gate teleportation with a single logical qubit per node;
/// `Telegate` and `Teledata` use nodes that hold a whole bit slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CommMethod {
    Baseline,
    Telegate,
    Teledata,
}

impl CommMethod {
    pub const ALL: [CommMethod; 3] = [CommMethod::Baseline, CommMethod::Telegate, CommMethod::Teledata];

    pub fn name(self) -> &'static str {
        match self {
            CommMethod::Baseline => "baseline",
            CommMethod::Telegate => "telegate",
            CommMethod::Teledata => "teledata",
        }
    }

    /// Topologies evaluated for this method.
    pub fn topologies(self) -> &'static [TopologyKind] {
        use TopologyKind::*;
        match self {
            CommMethod::Baseline => &[Bus, Line, Fully],
            _ => &TopologyKind::ALL,
        }
    }
}

impl fmt::Display for CommMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CommMethod {
    type Err = MultinetError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CommMethod::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| MultinetError::UnknownMethod(s.to_string()))
    }
}

/// Logical qubits per node for one bit slice: the operand qubits plus the
/// scratch a slice needs. Teledata nodes keep one extra slot to receive an
/// incoming qubit.
pub fn node_qubits(adder: DistAdder, method: CommMethod) -> usize {
    match (method, adder) {
        (CommMethod::Baseline, _) => 1,
        (CommMethod::Telegate, DistAdder::Vbe) => 3,
        (CommMethod::Telegate, DistAdder::Cdkm) => 2,
        (CommMethod::Telegate, DistAdder::Qcla) => 4,
        (CommMethod::Teledata, a) => node_qubits(a, CommMethod::Telegate) + 1,
    }
}

/// Bit slices held per node and transceiver qubits per node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeSpec {
    pub bits: usize,
    pub transceivers: u32,
}

impl NodeSpec {
    pub fn new(bits: usize, transceivers: u32) -> Result<Self, MultinetError> {
        if bits == 0 || transceivers == 0 {
            return Err(MultinetError::Capacity);
        }
        Ok(NodeSpec { bits, transceivers })
    }

    /// One bit slice per node, with the topology's usual transceivers.
    pub fn slice(topology: TopologyKind) -> Self {
        NodeSpec { bits: 1, transceivers: topology.transceivers() }
    }

    pub fn nodes(&self, n: usize) -> usize {
        n.div_ceil(self.bits)
    }
}

/// Operation times in nanoseconds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimingParams {
    pub epr_ns: f64,
    pub classical_ns: f64,
    pub ccnot_ns: f64,
    pub cnot_ns: f64,
    pub not_ns: f64,
}

impl Default for TimingParams {
    fn default() -> Self {
        TimingParams { epr_ns: 10.0, classical_ns: 10.0, ccnot_ns: 50.0, cnot_ns: 10.0, not_ns: 1.0 }
    }
}

impl TimingParams {
    pub fn with_epr(epr_ns: f64) -> Self {
        TimingParams { epr_ns, ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), MultinetError> {
        for (name, value) in [
            ("epr_ns", self.epr_ns),
            ("classical_ns", self.classical_ns),
            ("ccnot_ns", self.ccnot_ns),
            ("cnot_ns", self.cnot_ns),
            ("not_ns", self.not_ns),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(MultinetError::Timing { name, value });
            }
        }
        Ok(())
    }
}
