//! Gate kinds and gate instances.
//!
//! Operand order is fixed per kind:
//!
//! | kind        | operands            |
//! |-------------|---------------------|
//! | `NOT`       | target              |
//! | `CNOT`      | control, target     |
//! | `CCNOT`     | control, control, target |
//! | `FREDKIN`   | control, x, y       |
//! | `SWAP`      | x, y                |
//! | `SQRTX`     | control, target     |
//! | `SQRTX_DAG` | control, target     |
//! | `H`         | target              |
//!
//! The square-root gates are always the singly-controlled form; that is the
//! only shape in which they appear (inside the two-qubit Toffoli construction).
//! The Hadamard is only used to prepare encoded states; adders never contain it.

use std::fmt;
use std::str::FromStr;

use crate::error::SimError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Not,
    Cnot,
    Ccnot,
    Fredkin,
    Swap,
    SqrtX,
    SqrtXDag,
    H,
}

impl GateKind {
    pub const ALL: [GateKind; 8] = [
        GateKind::Not,
        GateKind::Cnot,
        GateKind::Ccnot,
        GateKind::Fredkin,
        GateKind::Swap,
        GateKind::SqrtX,
        GateKind::SqrtXDag,
        GateKind::H,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::Not | GateKind::H => 1,
            GateKind::Cnot | GateKind::Swap | GateKind::SqrtX | GateKind::SqrtXDag => 2,
            GateKind::Ccnot | GateKind::Fredkin => 3,
        }
    }

    /// True for gates that map basis states to basis states.
    pub fn is_classical(self) -> bool {
        !matches!(self, GateKind::SqrtX | GateKind::SqrtXDag | GateKind::H)
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::Cnot => "CNOT",
            GateKind::Ccnot => "CCNOT",
            GateKind::Fredkin => "FREDKIN",
            GateKind::Swap => "SWAP",
            GateKind::SqrtX => "SQRTX",
            GateKind::SqrtXDag => "SQRTX_DAG",
            GateKind::H => "H",
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GateKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| SimError::Parse(format!("unknown gate kind `{s}`")))
    }
}

/// One gate applied to concrete qubit indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    ops: [usize; 3],
}

impl Gate {
    /// Builds a gate, checking arity and operand distinctness.
    pub fn new(kind: GateKind, operands: &[usize]) -> Result<Gate, SimError> {
        if operands.len() != kind.arity() {
            return Err(SimError::Arity {
                kind,
                expected: kind.arity(),
                got: operands.len(),
            });
        }
        for i in 0..operands.len() {
            for j in (i + 1)..operands.len() {
                if operands[i] == operands[j] {
                    return Err(SimError::DuplicateOperand {
                        kind,
                        qubit: operands[i],
                    });
                }
            }
        }
        let mut ops = [0usize; 3];
        ops[..operands.len()].copy_from_slice(operands);
        Ok(Gate { kind, ops })
    }

    fn mk(kind: GateKind, operands: &[usize]) -> Gate {
        match Gate::new(kind, operands) {
            Ok(g) => g,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn not(t: usize) -> Gate {
        Gate::mk(GateKind::Not, &[t])
    }
    pub fn cnot(c: usize, t: usize) -> Gate {
        Gate::mk(GateKind::Cnot, &[c, t])
    }
    pub fn ccnot(c1: usize, c2: usize, t: usize) -> Gate {
        Gate::mk(GateKind::Ccnot, &[c1, c2, t])
    }
    pub fn fredkin(c: usize, x: usize, y: usize) -> Gate {
        Gate::mk(GateKind::Fredkin, &[c, x, y])
    }
    pub fn swap(x: usize, y: usize) -> Gate {
        Gate::mk(GateKind::Swap, &[x, y])
    }
    pub fn sqrt_x(c: usize, t: usize) -> Gate {
        Gate::mk(GateKind::SqrtX, &[c, t])
    }
    pub fn sqrt_x_dag(c: usize, t: usize) -> Gate {
        Gate::mk(GateKind::SqrtXDag, &[c, t])
    }
    pub fn h(t: usize) -> Gate {
        Gate::mk(GateKind::H, &[t])
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn qubits(&self) -> &[usize] {
        &self.ops[..self.kind.arity()]
    }

    /// The gate that undoes this one. Every kind except the square roots is
    /// self-inverse.
    pub fn inverse(&self) -> Gate {
        let kind = match self.kind {
            GateKind::SqrtX => GateKind::SqrtXDag,
            GateKind::SqrtXDag => GateKind::SqrtX,
            k => k,
        };
        Gate { kind, ops: self.ops }
    }

    /// Same gate with every operand passed through `f`.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Gate {
        let q: Vec<usize> = self.qubits().iter().map(|&q| f(q)).collect();
        Gate::mk(self.kind, &q)
    }

    pub fn is_classical(&self) -> bool {
        self.kind.is_classical()
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for q in self.qubits() {
            write!(f, " {q}")?;
        }
        Ok(())
    }
}

impl FromStr for Gate {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let kind: GateKind = parts
            .next()
            .ok_or_else(|| SimError::Parse("empty gate line".into()))?
            .parse()?;
        let ops = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| SimError::Parse(format!("bad qubit index `{p}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Gate::new(kind, &ops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        for g in [
            Gate::not(3),
            Gate::cnot(0, 4),
            Gate::ccnot(1, 2, 7),
            Gate::fredkin(0, 1, 2),
            Gate::swap(5, 6),
            Gate::sqrt_x(1, 2),
            Gate::sqrt_x_dag(2, 1),
            Gate::h(4),
        ] {
            let text = g.to_string();
            assert_eq!(text.parse::<Gate>().unwrap(), g);
        }
        assert_eq!(Gate::sqrt_x_dag(2, 1).to_string(), "SQRTX_DAG 2 1");
    }

    #[test]
    fn rejects_bad_operands() {
        assert!(Gate::new(GateKind::Cnot, &[1, 1]).is_err());
        assert!(Gate::new(GateKind::Ccnot, &[1, 2]).is_err());
        assert!("CNOT 1".parse::<Gate>().is_err());
        assert!("TOFFOLI 1 2 3".parse::<Gate>().is_err());
    }

    #[test]
    fn inverse_swaps_square_roots_only() {
        assert_eq!(Gate::sqrt_x(0, 1).inverse(), Gate::sqrt_x_dag(0, 1));
        assert_eq!(Gate::ccnot(0, 1, 2).inverse(), Gate::ccnot(0, 1, 2));
    }
}
