//! EPR-pair costs of error correction for a Steane block split across two
//! nodes A and B.
//!
//! A distributed logical zero is built either in place with teleported CNOTs
//! (telegate: one EPR pair per encoder CNOT crossing the cut) or in one node
//! and partly teleported across (teledata: one EPR pair per qubit that ends
//! up on the far side; the smaller side is always the one that moves).

use std::fmt;
use std::str::FromStr;

use crate::encoder::{DISTRIBUTED_ORDER, ENCODER_CNOTS};
use crate::QecError;

/// Syndrome measurements per QEC cycle: three bit and three phase syndromes,
/// each measured twice, one logical zero apiece.
pub const SYNDROMES_PER_CYCLE: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Breakpoint {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Breakpoint {
    pub const ALL: [Breakpoint; 6] =
        [Breakpoint::A, Breakpoint::B, Breakpoint::C, Breakpoint::D, Breakpoint::E, Breakpoint::F];

    /// Number of encoder qubits on node A.
    pub fn qubits_on_a(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for Breakpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = (b'a' + *self as u8) as char;
        write!(f, "{c}")
    }
}

impl FromStr for Breakpoint {
    type Err = QecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Breakpoint::ALL
            .into_iter()
            .find(|b| b.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| QecError::UnknownBreakpoint(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Telegate,
    Teledata,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Telegate => "telegate",
            Method::Teledata => "teledata",
        })
    }
}

impl FromStr for Method {
    type Err = QecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "telegate" => Ok(Method::Telegate),
            "teledata" => Ok(Method::Teledata),
            _ => Err(QecError::UnknownMethod(s.to_string())),
        }
    }
}

/// Which way the teledata qubits travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    BToA,
    AToB,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::BToA => "B->A",
            Direction::AToB => "A->B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BreakpointCost {
    pub breakpoint: Breakpoint,
    pub telegate: u64,
    pub teledata: u64,
    pub direction: Direction,
}

/// EPR pairs for one distributed |0_L⟩ split at `bp`, both ways.
pub fn logical_zero_epr_cost(bp: Breakpoint) -> BreakpointCost {
    let cut = bp.qubits_on_a();
    let side = |q: usize| DISTRIBUTED_ORDER.iter().position(|&x| x == q).expect("encoder qubit") < cut;
    let telegate = ENCODER_CNOTS.iter().filter(|&&(c, t)| side(c) != side(t)).count() as u64;
    let on_b = DISTRIBUTED_ORDER.len() - cut;
    BreakpointCost {
        breakpoint: bp,
        telegate,
        teledata: cut.min(on_b) as u64,
        direction: if cut < on_b { Direction::BToA } else { Direction::AToB },
    }
}

pub fn logical_zero_epr(bp: Breakpoint, method: Method) -> u64 {
    let c = logical_zero_epr_cost(bp);
    match method {
        Method::Telegate => c.telegate,
        Method::Teledata => c.teledata,
    }
}

/// EPR pairs for one QEC cycle of a block that stays split at `bp`.
pub fn static_qec_epr(bp: Breakpoint, method: Method) -> u64 {
    SYNDROMES_PER_CYCLE * logical_zero_epr(bp, method)
}

/// Moving a Steane block with error correction after every member's
/// teleport, compared with moving the whole block and correcting once.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DqecCost {
    pub method: Method,
    /// Logical zeroes over all six intermediate splits, per syndrome.
    pub per_syndrome: u64,
    /// EPR pairs for the twelve syndromes of the intermediate corrections.
    pub total: u64,
    /// Teleports in the most expensive single intermediate correction.
    pub worst_block: u64,
    /// Teleports to move the block and correct it locally afterwards.
    pub block_transfer: u64,
    /// True when the intermediate corrections cost more teleports than the
    /// whole block transfer, so they add more error exposure than they remove.
    pub dominated: bool,
}

pub fn dqec_cycle_epr(method: Method) -> DqecCost {
    let per: Vec<u64> = Breakpoint::ALL.iter().map(|&b| logical_zero_epr(b, method)).collect();
    let per_syndrome: u64 = per.iter().sum();
    let total = SYNDROMES_PER_CYCLE * per_syndrome;
    let worst_block = SYNDROMES_PER_CYCLE * per.iter().copied().max().unwrap_or(0);
    let block_transfer = DISTRIBUTED_ORDER.len() as u64;
    DqecCost {
        method,
        per_syndrome,
        total,
        worst_block,
        block_transfer,
        dominated: worst_block > block_transfer,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("c".parse::<Breakpoint>().unwrap(), Breakpoint::C);
        assert_eq!(Breakpoint::F.to_string(), "f");
        assert!(matches!("g".parse::<Breakpoint>(), Err(QecError::UnknownBreakpoint(_))));
        assert_eq!("Teledata".parse::<Method>().unwrap(), Method::Teledata);
    }

    #[test]
    fn static_split_at_d() {
        assert_eq!(static_qec_epr(Breakpoint::D, Method::Teledata), 36);
    }
}
