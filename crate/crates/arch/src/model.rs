//! The two machine models and the legality rules they impose.

use std::fmt;

use revsim::{Circuit, GateKind};

use crate::ArchError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArchModel {
    /// Abstract concurrent: native Toffoli, any operand distance.
    Ac,
    /// Neighbour-only two-qubit concurrent; `layout[q]` is the line position
    /// of qubit q.
    Ntc { layout: Vec<usize> },
}

impl ArchModel {
    /// NTC with qubit q at position q.
    pub fn ntc_identity(width: usize) -> Self {
        ArchModel::Ntc { layout: (0..width).collect() }
    }

    pub fn ntc(layout: Vec<usize>) -> Result<Self, ArchError> {
        let width = layout.len();
        let mut seen = vec![false; width];
        for &p in &layout {
            if p >= width || std::mem::replace(&mut seen[p], true) {
                return Err(ArchError::Layout { width });
            }
        }
        Ok(ArchModel::Ntc { layout })
    }

    pub fn name(&self) -> &'static str {
        match self {
            ArchModel::Ac => "AC",
            ArchModel::Ntc { .. } => "NTC",
        }
    }

    pub fn is_ntc(&self) -> bool {
        matches!(self, ArchModel::Ntc { .. })
    }

    /// Line position of qubit q (q itself on AC, where there is no line).
    pub fn position(&self, q: usize) -> usize {
        match self {
            ArchModel::Ac => q,
            ArchModel::Ntc { layout } => layout[q],
        }
    }

    pub(crate) fn check_width(&self, width: usize) -> Result<(), ArchError> {
        match self {
            ArchModel::Ntc { layout } if layout.len() != width => {
                Err(ArchError::LayoutWidth { width, got: layout.len() })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ArchModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks that every gate can run on `arch`.
///
/// On NTC two-qubit gates must act on adjacent positions. The one exception
/// is the controlled-√X class, which may span two positions: the last gate
/// of the Toffoli sequence couples the far control to the target across the
/// near control (see [`crate::decompose_ccnot_ntc`]).
pub fn check_legal(c: &Circuit, arch: &ArchModel) -> Result<(), ArchError> {
    arch.check_width(c.width())?;
    if !arch.is_ntc() {
        return Ok(());
    }
    for (index, g) in c.gates().iter().enumerate() {
        let kind = g.kind();
        let illegal = |reason: String| ArchError::Illegal { index, kind, arch: "NTC", reason };
        match kind {
            GateKind::Not | GateKind::H => {}
            GateKind::Ccnot | GateKind::Fredkin => {
                return Err(illegal("three-qubit gates must be decomposed".into()))
            }
            _ => {
                let q = g.qubits();
                let d = arch.position(q[0]).abs_diff(arch.position(q[1]));
                let limit = if matches!(kind, GateKind::SqrtX | GateKind::SqrtXDag) { 2 } else { 1 };
                if d > limit {
                    return Err(illegal(format!("operands are {d} positions apart")));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsim::Gate;

    #[test]
    fn layouts_must_be_permutations() {
        assert!(ArchModel::ntc(vec![2, 0, 1]).is_ok());
        assert_eq!(ArchModel::ntc(vec![0, 0, 1]), Err(ArchError::Layout { width: 3 }));
        assert_eq!(ArchModel::ntc(vec![0, 3]), Err(ArchError::Layout { width: 2 }));
    }

    #[test]
    fn ntc_rules() {
        let ntc = ArchModel::ntc_identity(4);
        let ok = Circuit::from_gates(4, vec![Gate::cnot(1, 2), Gate::not(3), Gate::sqrt_x(0, 2)]).unwrap();
        assert!(check_legal(&ok, &ntc).is_ok());
        for g in [Gate::cnot(0, 2), Gate::ccnot(0, 1, 2), Gate::sqrt_x(0, 3)] {
            let bad = Circuit::from_gates(4, vec![g]).unwrap();
            assert!(matches!(check_legal(&bad, &ntc), Err(ArchError::Illegal { .. })));
            assert!(check_legal(&bad, &ArchModel::Ac).is_ok());
        }
        // a permuted layout changes what is adjacent
        let far = ArchModel::ntc(vec![0, 3, 1, 2]).unwrap();
        let c = Circuit::from_gates(4, vec![Gate::cnot(0, 2)]).unwrap();
        assert!(check_legal(&c, &far).is_ok());
    }
}
