//! Reference figures for the 128-bit design study, printed to three
//! significant figures. They are only used to compare computed values
//! against; nothing in this crate derives from them.

use crate::algorithm::Algorithm;

pub struct LatencyRow {
    pub algorithm: Algorithm,
    /// (ccnot, cnot, not) times on AC.
    pub ac: (f64, f64, f64),
    pub ac_perf: f64,
    /// (two-qubit, not) times on NTC, when reported.
    pub ntc: Option<(f64, f64)>,
    pub ntc_perf: Option<f64>,
}

pub const LATENCY_128: [LatencyRow; 5] = [
    LatencyRow { algorithm: Algorithm::CVbe, ac: (1.25e8, 8.27e7, 0.0), ac_perf: 1.0, ntc: Some((8.32e8, 0.0)), ntc_perf: Some(1.0) },
    LatencyRow { algorithm: Algorithm::D, ac: (2.19e5, 2.57e4, 1.67e5), ac_perf: 570.0, ntc: None, ntc_perf: None },
    LatencyRow { algorithm: Algorithm::E, ac: (1.71e5, 1.96e4, 2.93e4), ac_perf: 727.0, ntc: None, ntc_perf: None },
    LatencyRow { algorithm: Algorithm::F, ac: (7.84e5, 1.30e4, 4.10e4), ac_perf: 159.0, ntc: Some((4.11e6, 4.10e4)), ntc_perf: Some(203.0) },
    LatencyRow { algorithm: Algorithm::G, ac: (1.50e7, 2.48e5, 7.93e5), ac_perf: 8.3, ntc: Some((7.87e7, 7.93e5)), ntc_perf: Some(10.6) },
];

/// (algorithm, space, concurrency) of the 128-bit parameter choices.
pub const PARAMS_128: [(Algorithm, usize, usize); 5] = [
    (Algorithm::CVbe, 897, 2),
    (Algorithm::D, 11969, 1512),
    (Algorithm::E, 12657, 2048),
    (Algorithm::F, 11077, 40),
    (Algorithm::G, 660, 2),
];

/// Approximate KQ at n = 1024.
pub const KQ_1024_CVBE: f64 = 2e14;
pub const KQ_1024_E: f64 = 2.4e11;

/// Rounds to `digits` significant figures.
pub fn sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    // via decimal text, so the result is the nearest double to the
    // rounded decimal rather than a product of inexact scalings
    format!("{:.*e}", (digits - 1).max(0) as usize, x).parse().unwrap_or(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(sig(218696.0, 3), 219000.0);
        assert_eq!(sig(25744.5, 3), 25700.0);
        assert_eq!(sig(0.0, 3), 0.0);
        assert_eq!(sig(8.274e7, 3), 8.27e7);
    }
}
