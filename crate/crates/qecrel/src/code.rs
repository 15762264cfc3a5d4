//! Code parameters and one- or two-level code stacks.

use std::fmt;

use crate::{check_probability, QecError};

/// An [[n,k,d]] code: n physical qubits hold k logical qubits and
/// (d−1)/2 errors are corrected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Code {
    pub n: u32,
    pub k: u32,
    pub d: u32,
}

impl Code {
    /// No encoding at all: one qubit that corrects nothing.
    pub const BARE: Code = Code { n: 1, k: 1, d: 1 };
    pub const STEANE: Code = Code { n: 7, k: 1, d: 3 };
    pub const GOLAY: Code = Code { n: 23, k: 1, d: 7 };

    pub fn new(n: u32, k: u32, d: u32) -> Result<Code, QecError> {
        if k == 0 || k > n || d.is_multiple_of(2) {
            return Err(QecError::InvalidCode { n, k, d });
        }
        Ok(Code { n, k, d })
    }

    pub fn correctable(&self) -> u32 {
        (self.d - 1) / 2
    }

    /// The lowest number of errors the code cannot handle, (d+1)/2.
    pub fn failure_weight(&self) -> u32 {
        self.d.div_ceil(2)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// An inner (physical-level) code with an optional outer code built from
/// inner blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeStack {
    pub inner: Code,
    pub outer: Option<Code>,
}

impl CodeStack {
    pub fn none() -> Self {
        CodeStack::single(Code::BARE)
    }

    pub fn single(code: Code) -> Self {
        CodeStack { inner: code, outer: None }
    }

    pub fn concat(inner: Code, outer: Code) -> Self {
        CodeStack { inner, outer: Some(outer) }
    }

    pub fn is_bare(&self) -> bool {
        self.inner == Code::BARE && self.outer.is_none()
    }

    /// Physical qubits per logical qubit.
    pub fn scale_up(&self) -> u32 {
        self.inner.n * self.outer.map_or(1, |o| o.n)
    }
}

impl fmt::Display for CodeStack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outer {
            _ if self.is_bare() => f.write_str("none"),
            None => write!(f, "{}", self.inner),
            Some(o) => write!(f, "{}+{}", self.inner, o),
        }
    }
}

/// Per-qubit failure probabilities: `p_t` for one teleportation and `p_m`
/// for sitting in memory for as long as one teleportation takes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorRates {
    pub p_t: f64,
    pub p_m: f64,
}

impl ErrorRates {
    pub fn new(p_t: f64, p_m: f64) -> Result<Self, QecError> {
        Ok(ErrorRates { p_t: check_probability(p_t)?, p_m: check_probability(p_m)? })
    }
}
