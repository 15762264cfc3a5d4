//! Classically driven register loading for exponent indirection.
//!
//! A w-qubit index selects one of 2^w classically known constants, which is
//! xored into a target register. One enable qubit per index value is raised
//! with an AND over the (suitably negated) index bits, each enable fans its
//! constant's 1-bits into the target with CNOTs, and the enables are lowered
//! again. The negations walk the index values in Gray-code order so that only
//! one index bit is flipped between consecutive enables.

use revsim::{CostTriple, Circuit, Gate};

use crate::{AdderError, Alloc};

#[derive(Clone, Debug)]
pub struct ArgSet {
    pub w: usize,
    pub circuit: Circuit,
    pub index: Vec<usize>,
    pub target: Vec<usize>,
    /// enables followed by AND-tree scratch; all return to 0
    pub ancillae: Vec<usize>,
    /// Latency model of the load (see [`argset_cost`]).
    pub cost: CostTriple,
}

/// Latency of one argument load as (CCNOT; CNOT; NOT)#(concurrency; space).
///
/// Every index value costs one AND over w bits, which takes one Toffoli time
/// for w = 2 and three for w = 3 (compute the pair product, extend it, erase
/// the pair product); the Gray-code walk costs one NOT time per value. The
/// CNOT fan-out overlaps the next enable's AND and does not add latency. The
/// w = 4 entry keeps three Toffoli times per value, assuming the two pair
/// products are formed side by side.
pub fn argset_cost(w: usize) -> Result<CostTriple, AdderError> {
    let per_value = match w {
        2 => 1.0,
        3 | 4 => 3.0,
        _ => return Err(AdderError::WordLength(w)),
    };
    let values = (1u64 << w) as f64;
    Ok(CostTriple::new(values * per_value, 0.0, values)
        .with_concurrency(values)
        .with_space(values + 1.0))
}

fn gray(j: usize) -> usize {
    j ^ (j >> 1)
}

/// Builds the load of `constants[index]` into a `width`-bit target.
pub fn gen_argset(w: usize, constants: &[u64], width: usize) -> Result<ArgSet, AdderError> {
    let cost = argset_cost(w)?;
    let values = 1usize << w;
    if constants.len() != values {
        return Err(AdderError::ConstantCount { expected: values, got: constants.len() });
    }
    let mut al = Alloc::default();
    let index = al.take(w);
    let target = al.take(width);
    let enables = al.take(values);
    let scratch = al.take(w - 2);
    let mut c = Circuit::new(al.used());

    // raise enable[v] for every v; the index bits are negated so that the
    // all-ones pattern means "index == v"
    let mut raise = Vec::new();
    let mut negated = vec![false; w];
    for j in 0..values {
        let v = gray(j);
        for (bit, neg) in negated.iter_mut().enumerate() {
            let want = v >> bit & 1 == 0;
            if *neg != want {
                raise.push(Gate::not(index[bit]));
                *neg = want;
            }
        }
        raise.extend(and_tree(&index, &scratch, enables[v]));
    }
    for (bit, neg) in negated.iter().enumerate() {
        if *neg {
            raise.push(Gate::not(index[bit]));
        }
    }

    c.extend(raise.iter().copied());
    for (v, &k) in constants.iter().enumerate() {
        for (i, &t) in target.iter().enumerate() {
            if i < 64 && k >> i & 1 == 1 {
                c.push(Gate::cnot(enables[v], t));
            }
        }
    }
    c.extend(raise.into_iter().rev());

    c.set_role("index", index.clone())?;
    c.set_role("B", target.clone())?;
    let mut ancillae = enables;
    ancillae.extend(scratch);
    c.set_role("ancilla", ancillae.clone())?;
    Ok(ArgSet { w, circuit: c, index, target, ancillae, cost })
}

/// out ⊕= AND(bits), using `scratch` (len(bits) − 2 qubits) for partial
/// products that are erased again.
fn and_tree(bits: &[usize], scratch: &[usize], out: usize) -> Vec<Gate> {
    let w = bits.len();
    if w == 2 {
        return vec![Gate::ccnot(bits[0], bits[1], out)];
    }
    let mut up = vec![Gate::ccnot(bits[0], bits[1], scratch[0])];
    for i in 2..w - 1 {
        up.push(Gate::ccnot(scratch[i - 2], bits[i], scratch[i - 1]));
    }
    let mut v = up.clone();
    v.push(Gate::ccnot(scratch[w - 3], bits[w - 1], out));
    v.extend(up.into_iter().rev());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use revsim::run_packed;

    #[test]
    fn cost_model() {
        assert_eq!(argset_cost(2).unwrap().to_string(), "(4; 0; 4)#(4; 5)");
        assert_eq!(argset_cost(3).unwrap().to_string(), "(24; 0; 8)#(8; 9)");
        assert_eq!(argset_cost(4).unwrap().times(), (48.0, 0.0, 16.0));
        assert_eq!(argset_cost(5).unwrap_err(), AdderError::WordLength(5));
    }

    #[test]
    fn loads_selected_constant() {
        for w in 2..=4 {
            let constants: Vec<u64> = (0..1u64 << w).map(|v| (v * 37 + 11) % 64).collect();
            let a = gen_argset(w, &constants, 6).unwrap();
            for idx in 0..1u64 << w {
                for pre in [0u64, 0b101101] {
                    let out = run_packed(&a.circuit, idx | pre << w).unwrap();
                    assert_eq!(out & ((1 << w) - 1), idx);
                    assert_eq!(out >> w & 63, pre ^ constants[idx as usize]);
                    assert_eq!(out >> (w + 6), 0, "scratch dirty");
                }
            }
        }
    }

    #[test]
    fn zero_constants_leave_register_alone() {
        let a = gen_argset(2, &[0; 4], 3).unwrap();
        assert_eq!(run_packed(&a.circuit, 0b101 << 2).unwrap(), 0b101 << 2);
    }
}
