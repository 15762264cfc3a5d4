//! Classical basis states of arbitrary width.

use std::fmt;

use crate::error::SimError;

/// A computational basis state. Qubit 0 is the low-order bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    width: usize,
    words: Vec<u64>,
}

impl BasisState {
    pub fn zeros(width: usize) -> Self {
        BasisState {
            width,
            words: vec![0; width.div_ceil(64).max(1)],
        }
    }

    /// Low `width` bits of `value`.
    pub fn from_u64(width: usize, value: u64) -> Self {
        let mut s = BasisState::zeros(width);
        for q in 0..width.min(64) {
            if value >> q & 1 == 1 {
                s.set(q, true);
            }
        }
        s
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut s = BasisState::zeros(bits.len());
        for (q, &b) in bits.iter().enumerate() {
            s.set(q, b);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn get(&self, q: usize) -> bool {
        debug_assert!(q < self.width);
        self.words[q / 64] >> (q % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, q: usize, v: bool) {
        debug_assert!(q < self.width);
        let mask = 1u64 << (q % 64);
        if v {
            self.words[q / 64] |= mask;
        } else {
            self.words[q / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, q: usize) {
        debug_assert!(q < self.width);
        self.words[q / 64] ^= 1u64 << (q % 64);
    }

    /// The whole state as an integer, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.width > 64 {
            return None;
        }
        Some(self.words[0])
    }

    /// Reads the qubits `reg` as a little-endian integer (`reg[0]` is bit 0).
    pub fn read(&self, reg: &[usize]) -> u64 {
        assert!(reg.len() <= 64, "register too wide to read as u64");
        reg.iter()
            .enumerate()
            .fold(0u64, |acc, (i, &q)| acc | (u64::from(self.get(q)) << i))
    }

    /// Writes `value` into the qubits `reg`, little-endian.
    pub fn write(&mut self, reg: &[usize], value: u64) {
        for (i, &q) in reg.iter().enumerate() {
            self.set(q, i < 64 && value >> i & 1 == 1);
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub(crate) fn check_width(&self, expected: usize) -> Result<(), SimError> {
        if self.width != expected {
            return Err(SimError::StateWidth {
                expected,
                got: self.width,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for BasisState {
    /// Printed high qubit first, like a binary literal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for q in (0..self.width).rev() {
            write!(f, "{}", u8::from(self.get(q)))?;
        }
        write!(f, "⟩")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_states_cross_word_boundaries() {
        let mut s = BasisState::zeros(130);
        s.set(0, true);
        s.set(64, true);
        s.flip(129);
        assert!(s.get(64) && s.get(129) && !s.get(63));
        assert_eq!(s.count_ones(), 3);
        assert_eq!(s.to_u64(), None);
    }

    #[test]
    fn register_read_write() {
        let mut s = BasisState::zeros(8);
        s.write(&[7, 2, 5], 0b101);
        assert!(s.get(7) && !s.get(2) && s.get(5));
        assert_eq!(s.read(&[7, 2, 5]), 0b101);
        assert_eq!(format!("{s:?}"), "|10100000⟩");
    }
}
