//! Circuits: an ordered gate list over a fixed-width register, plus named
//! register roles.
//!
//! The text form is line oriented. Two header directives carry the width and
//! the roles, then one gate per line:
//!
//! ```text
//! WIDTH 4
//! ROLE A 0 1
//! ROLE B 2 3
//! CNOT 0 2
//! CCNOT 0 1 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored when parsing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::SimError;
use crate::gate::{Gate, GateKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
    roles: BTreeMap<String, Vec<usize>>,
}

impl Circuit {
    pub fn new(width: usize) -> Self {
        Circuit {
            width,
            gates: Vec::new(),
            roles: BTreeMap::new(),
        }
    }

    pub fn from_gates(width: usize, gates: Vec<Gate>) -> Result<Self, SimError> {
        let mut c = Circuit::new(width);
        for g in gates {
            c.try_push(g)?;
        }
        Ok(c)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn try_push(&mut self, g: Gate) -> Result<(), SimError> {
        if let Some(&q) = g.qubits().iter().find(|&&q| q >= self.width) {
            return Err(SimError::OperandOutOfRange {
                index: self.gates.len(),
                qubit: q,
                width: self.width,
            });
        }
        self.gates.push(g);
        Ok(())
    }

    /// Appends a gate. Panics on an out-of-range operand, which is always a
    /// generator bug rather than bad user input.
    pub fn push(&mut self, g: Gate) {
        if let Err(e) = self.try_push(g) {
            panic!("{e}");
        }
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        for g in gates {
            self.push(g);
        }
    }

    /// Appends all gates of `other` (which must not be wider).
    pub fn append(&mut self, other: &Circuit) {
        assert!(other.width <= self.width, "appending a wider circuit");
        self.extend(other.gates.iter().copied());
    }

    pub fn roles(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.roles
    }

    pub fn role(&self, name: &str) -> Option<&[usize]> {
        self.roles.get(name).map(Vec::as_slice)
    }

    /// Names a register. Registers may not share qubits.
    pub fn set_role(&mut self, name: &str, qubits: Vec<usize>) -> Result<(), SimError> {
        for &q in &qubits {
            if q >= self.width {
                return Err(SimError::RoleOutOfRange {
                    name: name.to_string(),
                    qubit: q,
                    width: self.width,
                });
            }
        }
        for (other, qs) in &self.roles {
            if other == name {
                continue;
            }
            if let Some(&q) = qubits.iter().find(|q| qs.contains(q)) {
                return Err(SimError::RoleOverlap {
                    qubit: q,
                    first: other.clone(),
                    second: name.to_string(),
                });
            }
        }
        let mut seen = qubits.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(SimError::RoleOverlap {
                qubit: w[0],
                first: name.to_string(),
                second: name.to_string(),
            });
        }
        self.roles.insert(name.to_string(), qubits);
        Ok(())
    }

    /// The circuit that undoes this one: gates reversed and individually
    /// inverted. Roles are kept.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            width: self.width,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            roles: self.roles.clone(),
        }
    }

    pub fn is_classical(&self) -> bool {
        self.gates.iter().all(Gate::is_classical)
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind() == kind).count()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "WIDTH {}", self.width);
        for (name, qs) in &self.roles {
            let _ = write!(s, "ROLE {name}");
            for q in qs {
                let _ = write!(s, " {q}");
            }
            s.push('\n');
        }
        for g in &self.gates {
            let _ = writeln!(s, "{g}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Circuit, SimError> {
        let mut width = None;
        let mut roles = Vec::new();
        let mut gates = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let ctx = |msg: String| SimError::Parse(format!("line {}: {msg}", lineno + 1));
            if let Some(rest) = line.strip_prefix("WIDTH") {
                let w = rest
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| ctx(format!("bad width `{}`", rest.trim())))?;
                width = Some(w);
            } else if let Some(rest) = line.strip_prefix("ROLE ") {
                let mut parts = rest.split_whitespace();
                let name = parts
                    .next()
                    .ok_or_else(|| ctx("role without a name".into()))?
                    .to_string();
                let qs = parts
                    .map(|p| p.parse::<usize>().map_err(|_| ctx(format!("bad index `{p}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                roles.push((name, qs));
            } else {
                gates.push(line.parse::<Gate>().map_err(|e| ctx(e.to_string()))?);
            }
        }
        let width = match width {
            Some(w) => w,
            None => gates
                .iter()
                .flat_map(|g| g.qubits().iter().copied())
                .max()
                .map_or(0, |m| m + 1),
        };
        let mut c = Circuit::from_gates(width, gates)?;
        for (name, qs) in roles {
            c.set_role(&name, qs)?;
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_exact() {
        let mut c = Circuit::new(5);
        c.push(Gate::cnot(0, 2));
        c.push(Gate::ccnot(0, 1, 3));
        c.push(Gate::sqrt_x(3, 4));
        c.set_role("A", vec![0, 1]).unwrap();
        c.set_role("B", vec![2, 3]).unwrap();
        let text = c.to_text();
        let back = Circuit::from_text(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn rejects_out_of_range_and_overlapping_roles() {
        let mut c = Circuit::new(2);
        assert!(c.try_push(Gate::cnot(0, 2)).is_err());
        c.set_role("A", vec![0]).unwrap();
        assert!(c.set_role("B", vec![0, 1]).is_err());
        assert!(c.set_role("C", vec![1, 1]).is_err());
        assert!(c.set_role("D", vec![5]).is_err());
    }

    #[test]
    fn inverse_reverses_and_inverts() {
        let c = Circuit::from_gates(2, vec![Gate::sqrt_x(0, 1), Gate::not(0)]).unwrap();
        let inv = c.inverse();
        assert_eq!(inv.gates(), &[Gate::not(0), Gate::sqrt_x_dag(0, 1)]);
    }
}
