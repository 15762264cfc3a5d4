//! Cost models for modular exponentiation built from reversible adders.
//!
//! Everything here is arithmetic over closed forms: adder latencies on the
//! two architecture models, the number of multiplier calls when s
//! multipliers work in parallel and the exponent is consumed w bits at a
//! time, the number of adder calls per modular multiplication for the
//! different modulo strategies, and their composition into full latency,
//! space and KQ figures for the algorithm variants cVBE, BCDP and D–G.
//!
//! Latencies are [`CostTriple`]s. On NTC the Toffoli component is always
//! zero and the triple reads as (two-qubit gate times; NOT times).

mod adder;
mod algorithm;
mod calls;
mod kq;
pub mod published;
mod tradeoff;

use thiserror::Error;

pub use adder::{adder_latency, argset_latency, optimal_csla_m, AdderModel, Arch};
pub use algorithm::{modexp_latency, Algorithm, CostReport, ModExpConfig};
pub use calls::{modadd_calls, mult_calls, ExponentLength, ModAddCalls, ModuloStrategy};
pub use kq::{adder_kq, modexp_kq};
pub use revsim::CostTriple;
pub use tradeoff::{tradeoff_argmin, tradeoff_cost};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModExpError {
    #[error("no latency model for {adder} on {arch}")]
    Unsupported { adder: String, arch: Arch },
    #[error("{0}")]
    Adder(#[from] adders::AdderError),
    #[error("b = {b} exceeds 2^(p-1) = {limit} for p = {p}")]
    OverflowBound { p: u32, b: u64, limit: u64 },
    #[error("invalid parameter: {0}")]
    Param(String),
}
