use thiserror::Error;

use crate::gate::GateKind;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("{kind} takes {expected} operands, got {got}")]
    Arity {
        kind: GateKind,
        expected: usize,
        got: usize,
    },
    #[error("{kind} uses qubit {qubit} more than once")]
    DuplicateOperand { kind: GateKind, qubit: usize },
    #[error("gate {index} touches qubit {qubit} but the circuit has width {width}")]
    OperandOutOfRange {
        index: usize,
        qubit: usize,
        width: usize,
    },
    #[error("register `{name}` refers to qubit {qubit} outside width {width}")]
    RoleOutOfRange {
        name: String,
        qubit: usize,
        width: usize,
    },
    #[error("qubit {qubit} is claimed by both `{first}` and `{second}`")]
    RoleOverlap {
        qubit: usize,
        first: String,
        second: String,
    },
    #[error("gate {index} ({kind}) has no classical truth table")]
    NonClassicalGate { index: usize, kind: GateKind },
    #[error("width {width} exceeds the exhaustion bound {bound}")]
    WidthOverBound { width: usize, bound: usize },
    #[error("widths differ: {0} vs {1}")]
    WidthMismatch(usize, usize),
    #[error("basis state has width {got}, circuit expects {expected}")]
    StateWidth { expected: usize, got: usize },
    #[error("truth table is not a bijection: outputs for {a:#x} and {b:#x} collide")]
    NotBijection { a: u64, b: u64 },
    #[error("norm drifted to {norm} after gate {index}")]
    NormViolation { index: usize, norm: f64 },
    #[error("parse error: {0}")]
    Parse(String),
}
