//! Closed-form sequential gate counts (CCNOT, CNOT, NOT) and qubit counts
//! of the generated circuits, as functions of the width and layout.
//!
//! These are derived by counting the constructions, not by walking a
//! circuit; the test suite checks them against generated circuits.

use crate::lookahead::scratch_count;
use crate::select::{MuxStyle, SelectParams};
use crate::AdderKind;

/// (CCNOT, CNOT, NOT)
pub type Counts = (usize, usize, usize);

pub fn vbe_counts(n: usize) -> Counts {
    if n == 1 {
        (1, 1, 0)
    } else {
        (4 * n - 4, 4 * n - 3, 0)
    }
}

pub fn cdkm_counts(n: usize) -> Counts {
    if n >= 4 {
        (2 * n - 1, 5 * n - 3, 2 * n - 4)
    } else {
        (2 * n, 4 * n + 1, 0)
    }
}

/// For n = 2^k: (10n − 9k − 7; 4n − 5; 2n − 2).
pub fn qcla_counts(n: usize) -> Counts {
    assert!(n >= 2 && n.is_power_of_two());
    let k = n.trailing_zeros() as usize;
    (10 * n - 9 * k - 7, 4 * n - 5, 2 * n - 2)
}

/// Toffolis in one pass of the carry network over `nn` positions.
pub fn network_toffolis(nn: usize) -> usize {
    if nn < 2 {
        return 0;
    }
    let k = nn.ilog2();
    let g_rounds: usize = (1..=k).map(|t| nn >> t).sum();
    let c_rounds: usize = (1..=(2 * nn / 3).ilog2())
        .map(|t| (nn - (1 << (t - 1))) >> t)
        .sum();
    2 * scratch_count(nn) + g_rounds + c_rounds
}

/// Counts for the carry-select family.
pub fn select_counts(p: &SelectParams, kind: AdderKind) -> Counts {
    let SelectParams { m, g, f, .. } = *p;
    let k = p.fanout.copies(m);
    let (mux_cc, mux_cx) = match p.mux {
        MuxStyle::Fredkin => (2 * m - 2, 5 * m - 3),
        MuxStyle::Compact => (m - 1, 3 * m - 1),
    };
    let carry_cc = match kind {
        AdderKind::Csum => 2 * network_toffolis(g),
        _ => 2 * (g - 1),
    };
    let high = g - 1;
    (
        4 * f - 2 + high * (6 * m - 4 + mux_cc) + carry_cc,
        4 * f - 1 + high * (10 * m - 2 + 2 * (k - 1) + mux_cx) + 1,
        0,
    )
}

pub fn vbe_space(n: usize) -> usize {
    3 * n
}

pub fn cdkm_space(n: usize) -> usize {
    2 * n + 2
}

pub fn qcla_space(n: usize) -> usize {
    4 * n - n.ilog2() as usize - 1
}

/// Low group 3f, each high group 6m−1 plus its select copies, the network
/// scratch for CSUM, and the carry-out.
pub fn select_space(p: &SelectParams, kind: AdderKind) -> usize {
    let scratch = if kind == AdderKind::Csum { scratch_count(p.g) } else { 0 };
    3 * p.f + (p.g - 1) * (6 * p.m - 1 + p.fanout.copies(p.m) - 1) + scratch + 1
}

/// The clean conditional-sum space formula that assumes an in-place
/// multiplexer tree: (6m−1)(g−1) + 3f + ⌈3(g−1)/2 − 2 + (n−f)/2⌉.
pub fn csum_reference_space(p: &SelectParams) -> usize {
    let tail = (3.0 * (p.g - 1) as f64 / 2.0 - 2.0 + (p.n - p.f) as f64 / 2.0).ceil() as usize;
    (6 * p.m - 1) * (p.g - 1) + 3 * p.f + tail
}
