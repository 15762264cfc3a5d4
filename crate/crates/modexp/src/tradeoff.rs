//! Choosing the indirection word length.
//!
//! Longer words mean fewer quantum multiplications (⌈2n/w⌉ of them) but
//! 2^w classical precomputations per word, n·2^(w+1) in total. With the
//! quantum multiplication priced at `ratio` classical ones, the cheapest w
//! grows by roughly log₂ of the ratio, less a little for the 1/w term.

pub fn tradeoff_cost(n: usize, w: u32, ratio: f64) -> f64 {
    assert!(w >= 1 && ratio > 0.0, "need w >= 1 and ratio > 0");
    (2 * n).div_ceil(w as usize) as f64 * ratio + n as f64 * 2f64.powi(w as i32 + 1)
}

/// Cheapest word length in 1..=max_w (ties go to the shorter word).
pub fn tradeoff_argmin(n: usize, ratio: f64, max_w: u32) -> u32 {
    (1..=max_w.max(1))
        .min_by(|&a, &b| tradeoff_cost(n, a, ratio).total_cmp(&tradeoff_cost(n, b, ratio)))
        .unwrap()
}
