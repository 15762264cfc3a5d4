//! Serial links: a block is teleported one qubit at a time, so every member
//! waits n−1 teleport durations in memory, exposed to memory errors.

use crate::{binomial, Code};

fn exactly(n: u32, j: u32, p: f64) -> f64 {
    binomial(n, j) * p.powi(j as i32) * (1.0 - p).powi((n - j) as i32)
}

/// Probability that `i` members of the block pick up a memory error during
/// the serial transfer, p_M(n,i) with the per-qubit wait failure
/// p'_m = 1 − (1 − p_m)^(n−1).
pub fn memory_error_count(code: &Code, p_m: f64, i: u32) -> f64 {
    let waited = -(f64::from(code.n - 1) * (-p_m).ln_1p()).exp_m1();
    exactly(code.n, i, waited)
}

/// Failure probability of the serial transfer relative to a parallel one
/// with perfect memory: p_f / p_e, where p_f sums every way of reaching
/// m = (d+1)/2 errors from i memory errors and m−i teleport errors.
///
/// With p_t = 0 the teleport-only probability is zero; the ratio is then 1
/// when memory is also perfect and infinite otherwise.
pub fn serial_memory_penalty(code: &Code, p_t: f64, p_m: f64) -> f64 {
    let (n, m) = (code.n, code.failure_weight());
    let p_e = exactly(n, m, p_t);
    let p_f: f64 = (0..=m)
        .map(|i| memory_error_count(code, p_m, i) * exactly(n, m - i, p_t))
        .sum();
    if p_e == 0.0 {
        return if p_f == 0.0 { 1.0 } else { f64::INFINITY };
    }
    p_f / p_e
}

/// Memory error rate per teleport duration used for the serial-link estimate:
/// one tenth of p_t, spread over the n−1 waiting periods.
pub fn serial_pm_rule(code: &Code, p_t: f64) -> f64 {
    p_t / (10.0 * f64::from(code.n - 1))
}
