//! Reversible circuits and the two simulators used to check them.
//!
//! * [`run_permutation`] / [`truth_table`] treat every classical gate as a
//!   permutation of basis states and simulate exhaustively.
//! * [`run_statevector`] keeps a dense amplitude vector so the controlled
//!   square-root-of-X gates used by two-qubit Toffoli constructions can be
//!   checked too.
//!
//! Qubit 0 is the low-order bit of every packed state and register value.
//! Everything here is immutable once built, so simulations can run from any
//! number of threads at once.

pub mod circuit;
pub mod cost;
pub mod equiv;
pub mod error;
pub mod gate;
pub mod perm;
pub mod state;
pub mod statevec;

pub use circuit::Circuit;
pub use cost::CostTriple;
pub use equiv::{assert_equiv, equivalent, Equivalence};
pub use error::SimError;
pub use gate::{Gate, GateKind};
pub use perm::{run_packed, run_permutation, truth_table, truth_table_bounded, Bounds};
pub use state::BasisState;
pub use statevec::{evolve, output_map, run_statevector, run_statevector_bounded, StateVector};
