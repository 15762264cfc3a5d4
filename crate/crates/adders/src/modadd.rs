//! Controlled addition of a classical constant modulo N with three adder
//! blocks.
//!
//! Registers: the sum register v has n+1 bits (the top bit is a sign bit that
//! is 0 on entry and exit), y is an (n+1)-bit scratch register that only ever
//! holds classically loaded constants, plus a carry register, an overflow
//! flag and the control qubit.
//!
//! 1. y ← ctrl·(x − N) mod 2^{n+1};  v ← v + y.   The sign bit of v now
//!    says whether v + x < N.
//! 2. flag ← sign; y ← flag·N;  v ← v + y.       v = (v + x) mod N.
//! 3. The flag is erased by comparing the result with x: it was set exactly
//!    when the result is ≥ x, which is the carry-out of r + (2^n − x).
//!    Only the carry chain is computed and then uncomputed.
//!
//! Constants are loaded with CNOTs from the enabling qubit into the bits
//! where the constant is 1, so no register ever stores N itself.

use revsim::{run_packed, Circuit, Gate};

use crate::ripple::{carry_chain, carry_chain_undo, ripple_add};
use crate::{AdderError, Alloc};

#[derive(Clone, Debug)]
pub struct ModAdder {
    pub n: usize,
    pub modulus: u64,
    pub addend: u64,
    pub circuit: Circuit,
    /// n+1 qubits, low bit first; the top one must be 0.
    pub v: Vec<usize>,
    pub ctrl: usize,
    pub flag: usize,
    /// Scratch (constant register and carries); all return to 0.
    pub ancillae: Vec<usize>,
}

/// Number of full adder blocks in the construction.
pub const ADDER_BLOCKS: usize = 3;

fn load(c: &mut Circuit, enable: usize, reg: &[usize], value: u64) {
    for (i, &q) in reg.iter().enumerate() {
        if value >> i & 1 == 1 {
            c.push(Gate::cnot(enable, q));
        }
    }
}

/// Adds the constant `addend` modulo `modulus` (with 2^{n−1} < modulus < 2^n)
/// to v when ctrl is set.
pub fn gen_modadd(n: usize, modulus: u64, addend: u64) -> Result<ModAdder, AdderError> {
    if n == 0 || n > 62 {
        return Err(AdderError::TooNarrow { n, min: 1 });
    }
    if !(modulus > 1u64 << (n - 1) && modulus < 1u64 << n) {
        return Err(AdderError::Modulus { n, modulus });
    }
    if addend >= modulus {
        return Err(AdderError::Constant { value: addend, modulus });
    }
    let word = 1u64 << (n + 1);
    let mut al = Alloc::default();
    let v = al.take(n + 1);
    let y = al.take(n + 1);
    let carries = al.take(n);
    let flag = al.one();
    let ctrl = al.one();
    let mut c = Circuit::new(al.used());

    // block 1: v += x - N
    let shifted = (addend + word - modulus) % word;
    load(&mut c, ctrl, &y, shifted);
    ripple_add(&mut c, &y, &v, &carries, None);
    load(&mut c, ctrl, &y, shifted);
    c.push(Gate::cnot(v[n], flag));

    // block 2: v += flag * N
    load(&mut c, flag, &y, modulus);
    ripple_add(&mut c, &y, &v, &carries, None);
    load(&mut c, flag, &y, modulus);

    // block 3: flag ^= ctrl & (v >= x)
    if addend == 0 {
        c.push(Gate::cnot(ctrl, flag));
    } else {
        let complement = (1u64 << n) - addend;
        load(&mut c, ctrl, &y[..n], complement);
        carry_chain(&mut c, &y[..n], &v[..n], &carries);
        c.push(Gate::cnot(carries[n - 1], flag));
        carry_chain_undo(&mut c, &y[..n], &v[..n], &carries);
        load(&mut c, ctrl, &y[..n], complement);
    }

    c.set_role("B", v.clone())?;
    c.set_role("ancilla", y.iter().chain(&carries).copied().collect())?;
    c.set_role("flag", vec![flag])?;
    c.set_role("ctrl", vec![ctrl])?;
    let mut ancillae = y;
    ancillae.extend(carries);
    Ok(ModAdder {
        n,
        modulus,
        addend,
        circuit: c,
        v,
        ctrl,
        flag,
        ancillae,
    })
}

impl ModAdder {
    /// Runs the circuit on (v, ctrl) and returns the new v, checking that the
    /// flag, the sign bit and every scratch qubit came back to zero.
    pub fn apply(&self, v: u64, ctrl: bool) -> Result<u64, String> {
        if v >= self.modulus {
            return Err(format!("input {v} is not below the modulus {}", self.modulus));
        }
        let mut input = v << self.v[0];
        if ctrl {
            input |= 1 << self.ctrl;
        }
        let out = run_packed(&self.circuit, input).map_err(|e| e.to_string())?;
        if out >> self.flag & 1 == 1 {
            return Err("flag left set".into());
        }
        if out >> self.ctrl & 1 != ctrl as u64 {
            return Err("control changed".into());
        }
        if let Some(q) = self.ancillae.iter().find(|&&q| out >> q & 1 == 1) {
            return Err(format!("scratch qubit {q} left at 1"));
        }
        let r = self.v.iter().enumerate().fold(0, |acc, (i, &q)| acc | (out >> q & 1) << i);
        if r >> self.n != 0 {
            return Err("sign bit left set".into());
        }
        Ok(r)
    }
}
