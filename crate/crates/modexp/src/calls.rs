//! How many multiplier calls and adder calls an exponentiation needs.

use crate::ModExpError;

/// How the length of the exponent, counted in w-bit words, enters the
/// multiplier-call count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExponentLength {
    /// ⌈(2n+1)/w⌉ words; with w = 1 this is the plain 2n+1-bit exponent.
    #[default]
    Full,
    /// ⌈2n/w⌉ words. This is the count that reproduces the 128-bit
    /// algorithm tables.
    Words,
}

impl ExponentLength {
    fn words(self, n: usize, w: usize) -> usize {
        match self {
            ExponentLength::Full => (2 * n + 1).div_ceil(w),
            ExponentLength::Words => (2 * n).div_ceil(w),
        }
    }
}

/// Multiplier latencies for an exponentiation with s parallel multipliers
/// and w-bit exponent words.
///
/// The L exponent words are split over s multipliers, each taking
/// r = ⌊L/s⌋ (or r+1) of them; the remainder is spread as extra work and
/// the s partial products are combined in a logarithmic tree:
/// 2r + 1 + ⌈log₂(⌈(s − L + rs)/4⌉ + L − rs)⌉.
pub fn mult_calls(n: usize, s: usize, w: usize, len: ExponentLength) -> Result<u64, ModExpError> {
    if n == 0 || w == 0 {
        return Err(ModExpError::Param("n and w must be positive".into()));
    }
    if s == 0 || s > n {
        return Err(ModExpError::Param(format!("multiplier count s={s} must be in 1..={n}")));
    }
    let l = len.words(n, w) as i64;
    let s = s as i64;
    let r = l / s;
    let spread = (s - l + r * s + 3).div_euclid(4);
    let arg = spread + l - r * s;
    let log = if arg <= 1 { 0 } else { 64 - ((arg - 1) as u64).leading_zeros() as i64 };
    Ok((2 * r + 1 + log) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuloStrategy {
    /// Five adder blocks per modular addition.
    Vbe5,
    /// The three-block modular adder.
    Ema3,
    /// p extra overflow qubits, modulo reduction every b additions.
    Overflow { p: u32, b: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModAddCalls {
    /// Adder calls for one n-bit modular multiplication.
    pub per_multiplication: f64,
    /// Adder calls for the final reduction at the end of the computation.
    pub cleanup: u64,
}

/// Adder calls per modular multiplication (n modular additions).
pub fn modadd_calls(n: usize, strategy: ModuloStrategy) -> Result<ModAddCalls, ModExpError> {
    let n = n as f64;
    Ok(match strategy {
        ModuloStrategy::Vbe5 => ModAddCalls { per_multiplication: 5.0 * n, cleanup: 0 },
        ModuloStrategy::Ema3 => ModAddCalls { per_multiplication: 3.0 * n, cleanup: 0 },
        ModuloStrategy::Overflow { p, b } => {
            if p == 0 || p > 63 {
                return Err(ModExpError::Param(format!("overflow qubits p={p} out of range")));
            }
            let limit = 1u64 << (p - 1);
            if b == 0 || b > limit {
                return Err(ModExpError::OverflowBound { p, b, limit });
            }
            // b additions share one subtraction: 2b + 1 adder calls
            let b = b as f64;
            ModAddCalls { per_multiplication: n * (2.0 * b + 1.0) / b, cleanup: 3 * p as u64 }
        }
    })
}
