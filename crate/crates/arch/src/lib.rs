//! Architecture models for executing reversible circuits.
//!
//! Two machines are modelled. The abstract concurrent machine (AC) runs any
//! gate on any operands, including native Toffolis. The neighbour-only
//! machine (NTC) keeps its qubits on a line and only runs one- and
//! two-qubit gates between adjacent positions, so Toffolis are replaced by a
//! five-gate controlled-√X sequence and distant operands are brought together
//! with SWAPs.
//!
//! Scheduling assigns each gate a start time under the rule that a qubit is
//! an operand of at most one gate at a time. Gate classes have strictly
//! ordered durations (Toffoli ≫ two-qubit ≫ NOT), so depths come out as
//! (CCNOT; CNOT; NOT) triples.

mod count;
mod decompose;
mod lower;
mod model;
mod schedule;
mod template;

use revsim::{GateKind, SimError};
use thiserror::Error;

pub use count::count_gates;
pub use decompose::{decompose_ccnot_ntc, decompose_fredkin};
pub use lower::{lower, Lowered};
pub use model::{check_legal, ArchModel};
pub use schedule::{
    critical_path, schedule, schedule_capped, schedule_unchecked, GateClass, ScheduledCircuit,
};
pub use template::{vbe_ntc_template, NtcTemplate};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArchError {
    #[error("layout is not a permutation of 0..{width}")]
    Layout { width: usize },
    #[error("layout has {got} positions for a circuit of width {width}")]
    LayoutWidth { width: usize, got: usize },
    #[error("gate {index} ({kind}) is not allowed on {arch}: {reason}")]
    Illegal {
        index: usize,
        kind: GateKind,
        arch: &'static str,
        reason: String,
    },
    #[error("qubit {qubit} is used by gates {first} and {second} at the same time")]
    Overlap {
        qubit: usize,
        first: usize,
        second: usize,
    },
    #[error("concurrency cap must be at least 1")]
    ZeroCap,
    #[error("template needs n >= 1")]
    TemplateWidth,
    #[error(transparent)]
    Circuit(#[from] SimError),
}
