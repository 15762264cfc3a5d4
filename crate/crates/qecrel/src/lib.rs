//! Reliability of logical qubits that travel between nodes by teleportation.
//!
//! Every physical qubit of a code block fails independently with probability
//! `p_t` per teleportation. A block fails when more errors land in it than the
//! code corrects; a computation fails when any of its `t` logical
//! teleportations fails. From that follow:
//!
//! * block and algorithm failure probabilities for one- and two-level codes
//!   ([`p_block`], [`p_alg`]),
//! * the teleportation error rate a computation can tolerate
//!   ([`required_pt`], [`required_pt_exact`], [`strength_table`]),
//! * the penalty of sending a block one qubit at a time while the rest of it
//!   waits in memory ([`serial_memory_penalty`]),
//! * the EPR-pair bill for building a Steane logical zero across two nodes
//!   and for error-correcting a block in transit ([`logical_zero_epr_cost`],
//!   [`dqec_cycle_epr`]).
//!
//! All functions are pure.

mod code;
mod distributed;
mod encoder;
mod failure;
mod memory;
mod strength;

pub use code::{Code, CodeStack, ErrorRates};
pub use distributed::{
    dqec_cycle_epr, logical_zero_epr, logical_zero_epr_cost, static_qec_epr, Breakpoint,
    BreakpointCost, Direction, DqecCost, Method, SYNDROMES_PER_CYCLE,
};
pub use encoder::{steane_codewords, steane_zero_encoder, DISTRIBUTED_ORDER, ENCODER_CNOTS};
pub use failure::{binomial, p_alg, p_alg_exact, p_block, required_pt, required_pt_exact, PtBound};
pub use memory::{memory_error_count, serial_memory_penalty, serial_pm_rule};
pub use strength::{
    matches_printed, round_sig, strength_table, StrengthCell, StrengthRow, STRENGTH_ROWS,
    TELEPORT_COUNTS,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QecError {
    #[error("[[{n},{k},{d}]] is not a valid code (need 1 ≤ k ≤ n and odd d ≥ 1)")]
    InvalidCode { n: u32, k: u32, d: u32 },
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("target failure probability {0} must lie strictly between 0 and 1")]
    Target(f64),
    #[error("the number of logical teleportations must be at least 1")]
    NoTeleports,
    #[error("unknown breakpoint `{0}` (expected one of a, b, c, d, e, f)")]
    UnknownBreakpoint(String),
    #[error("unknown method `{0}` (expected telegate or teledata)")]
    UnknownMethod(String),
}

pub(crate) fn check_probability(p: f64) -> Result<f64, QecError> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(QecError::Probability(p))
    }
}
