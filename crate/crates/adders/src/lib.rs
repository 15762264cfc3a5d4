//! Reversible adder generators.
//!
//! Every generator returns an [`AdderCircuit`]: a [`revsim::Circuit`] plus the
//! qubit indices of its operand, sum, carry-out and scratch registers. All
//! circuits are built from NOT, CNOT and CCNOT only (Fredkin gates used by the
//! multiplexers are expanded), so the exhaustive permutation simulator can
//! check them.
//!
//! | kind | width | notes |
//! |------|-------|-------|
//! | [`gen_vbe`]  | 3n | carry ripple, sum in place in B |
//! | [`gen_cdkm`] | 2n+2 | majority/unmajority ripple with one ancilla |
//! | [`gen_qcla`] | 4n−log₂n−1 | logarithmic-depth carry lookahead, n a power of two |
//! | [`gen_csla`] | see [`select`] | carry-select with a rippled group carry |
//! | [`gen_csum`] | see [`select`] | carry-select with a lookahead tree over groups |
//!
//! [`gen_modadd`] and [`gen_argset`] build the pieces used by modular
//! exponentiation: a constant modular adder and the classically driven
//! register load.

pub mod argset;
pub mod cdkm;
pub mod formulas;
pub mod lookahead;
pub mod modadd;
pub mod qcla;
pub mod ripple;
pub mod select;
pub mod verify;

use std::fmt;

use revsim::{Circuit, SimError};
use thiserror::Error;

pub use argset::{argset_cost, gen_argset, ArgSet};
pub use cdkm::gen_cdkm;
pub use modadd::{gen_modadd, ModAdder};
pub use qcla::gen_qcla;
pub use ripple::gen_vbe;
pub use select::{gen_csla, gen_csla_with, gen_csum, gen_csum_with, Fanout, MuxStyle, SelectParams};
pub use verify::{verify_exhaustive, verify_pair, Mismatch};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AdderError {
    #[error("operand width must be at least {min}, got {n}")]
    TooNarrow { n: usize, min: usize },
    #[error("carry-lookahead adder needs a power-of-two width, got {0}")]
    NotPowerOfTwo(usize),
    #[error("group layout n={n}, m={m}, g={g}, f={f} is inconsistent (need f + (g-1)m = n, m >= 1, f >= 1, g >= {min_g})")]
    Groups {
        n: usize,
        m: usize,
        g: usize,
        f: usize,
        min_g: usize,
    },
    #[error("modulus {modulus} is not in (2^{}, 2^{n})", n - 1)]
    Modulus { n: usize, modulus: u64 },
    #[error("constant {value} is not below the modulus {modulus}")]
    Constant { value: u64, modulus: u64 },
    #[error("argument word length {0} is unsupported (expected 2, 3 or 4)")]
    WordLength(usize),
    #[error("expected {expected} constants for the index register, got {got}")]
    ConstantCount { expected: usize, got: usize },
    #[error(transparent)]
    Circuit(#[from] SimError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdderKind {
    Vbe,
    Cdkm,
    Qcla,
    Csla,
    Csum,
}

impl AdderKind {
    pub const ALL: [AdderKind; 5] = [
        AdderKind::Vbe,
        AdderKind::Cdkm,
        AdderKind::Qcla,
        AdderKind::Csla,
        AdderKind::Csum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdderKind::Vbe => "VBE",
            AdderKind::Cdkm => "CDKM",
            AdderKind::Qcla => "QCLA",
            AdderKind::Csla => "CSLA",
            AdderKind::Csum => "CSUM",
        }
    }
}

impl fmt::Display for AdderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AdderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        AdderKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown adder `{s}` (expected vbe, cdkm, qcla, csla or csum)"))
    }
}

/// A generated adder with its register map.
///
/// `s` may share qubits with `b` (in-place adders write the sum over B).
/// Every qubit that is in none of `a`, `b`, `s` or `cout` is scratch and
/// must return to 0.
#[derive(Clone, Debug)]
pub struct AdderCircuit {
    pub kind: AdderKind,
    pub n: usize,
    pub circuit: Circuit,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub s: Vec<usize>,
    pub cout: usize,
    pub ancillae: Vec<usize>,
}

impl AdderCircuit {
    pub fn width(&self) -> usize {
        self.circuit.width()
    }

    /// Qubits of B that are not overwritten by the sum and therefore must be
    /// restored.
    pub fn b_preserved(&self) -> Vec<usize> {
        self.b.iter().copied().filter(|q| !self.s.contains(q)).collect()
    }
}

/// Hands out consecutive qubit indices.
#[derive(Default)]
pub(crate) struct Alloc {
    next: usize,
}

impl Alloc {
    pub(crate) fn take(&mut self, k: usize) -> Vec<usize> {
        let r = (self.next..self.next + k).collect();
        self.next += k;
        r
    }

    pub(crate) fn one(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    pub(crate) fn used(&self) -> usize {
        self.next
    }
}

pub fn generate(kind: AdderKind, n: usize) -> Result<AdderCircuit, AdderError> {
    match kind {
        AdderKind::Vbe => gen_vbe(n),
        AdderKind::Cdkm => gen_cdkm(n),
        AdderKind::Qcla => gen_qcla(n),
        AdderKind::Csla => {
            let p = SelectParams::default_csla(n)?;
            gen_csla(n, p.m, p.f)
        }
        AdderKind::Csum => {
            let p = SelectParams::default_csum(n)?;
            gen_csum(n, p.m, p.g, p.fanout)
        }
    }
}
