//! Closed-form adder latencies per architecture.

use std::fmt;
use std::str::FromStr;

use adders::{argset_cost, formulas, SelectParams};
use revsim::CostTriple;

use crate::ModExpError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arch {
    Ac,
    Ntc,
}

impl fmt::Display for Arch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arch::Ac => "AC",
            Arch::Ntc => "NTC",
        })
    }
}

impl FromStr for Arch {
    type Err = ModExpError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ac" => Ok(Arch::Ac),
            "ntc" => Ok(Arch::Ntc),
            _ => Err(ModExpError::Param(format!("unknown architecture `{s}`"))),
        }
    }
}

/// An adder together with the layout parameters its latency depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdderModel {
    Vbe,
    Cdkm,
    Qcla,
    /// Carry-select with groups of m bits and g groups.
    Csla { m: usize, g: usize },
    /// Conditional-sum with groups of m bits and g groups.
    Csum { m: usize, g: usize },
    /// The sequential constant-adder of the BCDP construction.
    Bcdp,
}

impl AdderModel {
    /// Conditional-sum layout with m-bit groups covering n bits.
    pub fn csum_for(n: usize, m: usize) -> Self {
        AdderModel::Csum { m, g: n.div_ceil(m) }
    }

    pub fn csla_for(n: usize, m: usize) -> Self {
        AdderModel::Csla { m, g: n.div_ceil(m) }
    }

    /// Qubits used by an n-bit adder of this kind.
    pub fn space(&self, n: usize) -> Result<usize, ModExpError> {
        Ok(match *self {
            AdderModel::Vbe => formulas::vbe_space(n),
            AdderModel::Cdkm => formulas::cdkm_space(n),
            AdderModel::Qcla => formulas::qcla_space(n),
            AdderModel::Csum { m, g } => formulas::csum_reference_space(&SelectParams::csum(n, m, g)?),
            // groups of 6m−1 plus the low group and a fan-out of four per group
            AdderModel::Csla { m, g } => (6 * m - 1) * (g - 1) + 3 * (n - (g - 1) * m) + 4 * g,
            AdderModel::Bcdp => 5 * n + 3,
        })
    }

    /// Gates that can run at once inside one adder on AC.
    pub fn concurrency(&self, n: usize) -> usize {
        match *self {
            AdderModel::Vbe | AdderModel::Cdkm | AdderModel::Bcdp => 2,
            AdderModel::Qcla => n,
            AdderModel::Csla { g, .. } => g,
            AdderModel::Csum { .. } => n.saturating_sub(2),
        }
    }
}

impl fmt::Display for AdderModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdderModel::Vbe => f.write_str("VBE"),
            AdderModel::Cdkm => f.write_str("CDKM"),
            AdderModel::Qcla => f.write_str("QCLA"),
            AdderModel::Csla { m, g } => write!(f, "CSLA(m={m}, g={g})"),
            AdderModel::Csum { m, g } => write!(f, "CSUM(m={m}, g={g})"),
            AdderModel::Bcdp => f.write_str("BCDP"),
        }
    }
}

fn ceil_log2(x: usize) -> f64 {
    if x <= 1 {
        0.0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as f64
    }
}

/// Latency of one n-bit addition.
///
/// AC values are circuit depths with full concurrency; NTC values are
/// (0; two-qubit gate times; NOT times). Pairs without a model (anything
/// but VBE and CDKM on NTC) are reported as unsupported.
pub fn adder_latency(adder: AdderModel, n: usize, arch: Arch) -> Result<CostTriple, ModExpError> {
    if n == 0 {
        return Err(ModExpError::Param("adder width must be positive".into()));
    }
    let nf = n as f64;
    let t = match (adder, arch) {
        (AdderModel::Vbe, Arch::Ac) => CostTriple::new(3.0 * nf - 3.0, 2.0 * nf - 3.0, 0.0).with_concurrency(3.0),
        (AdderModel::Vbe, Arch::Ntc) => CostTriple::new(0.0, 20.0 * nf - 15.0, 0.0).with_concurrency(2.0),
        (AdderModel::Cdkm, Arch::Ac) => CostTriple::new(2.0 * nf - 1.0, 5.0, 0.0),
        (AdderModel::Cdkm, Arch::Ntc) => CostTriple::new(0.0, 10.0 * nf + 5.0, 0.0),
        (AdderModel::Qcla, Arch::Ac) => {
            if !n.is_power_of_two() {
                return Err(adders::AdderError::NotPowerOfTwo(n).into());
            }
            CostTriple::new(4.0 * ceil_log2(n) + 3.0, 4.0, 2.0)
        }
        (AdderModel::Csla { m, g }, Arch::Ac) => {
            check_groups(n, m, g, 2)?;
            let (m, g) = (m as f64, g as f64);
            CostTriple::new(4.0 * g + 2.5 * m - 6.0, 6.0, 2.0 * g - 2.0)
        }
        (AdderModel::Csum { m, g }, Arch::Ac) => {
            check_groups(n, m, g, 3)?;
            let l = ceil_log2(g - 1);
            CostTriple::new(2.0 * m as f64 + 4.0 * l + 2.0, 4.0, 4.0 * l + 2.0)
        }
        (AdderModel::Bcdp, Arch::Ac) => CostTriple::new(6.0 * nf - 2.0, 2.0 * nf, 2.0),
        (adder, arch) => return Err(ModExpError::Unsupported { adder: adder.to_string(), arch }),
    };
    Ok(t.with_space(adder.space(n)? as f64))
}

fn check_groups(n: usize, m: usize, g: usize, min_g: usize) -> Result<(), ModExpError> {
    if m == 0 || g < min_g || (g - 1) * m >= n {
        return Err(ModExpError::Param(format!(
            "group layout m={m}, g={g} does not fit n={n} (need g >= {min_g} and (g-1)m < n)"
        )));
    }
    Ok(())
}

/// Group size that minimises the carry-select latency for a fixed n:
/// 4g + 5m/2 with g ≈ n/m is smallest near m = √(8n/5).
pub fn optimal_csla_m(n: usize) -> usize {
    ((8.0 * n as f64 / 5.0).sqrt().round() as usize).max(1)
}

/// Latency of loading one indirection argument. On NTC each Toffoli time
/// becomes five two-qubit gate times.
pub fn argset_latency(w: usize, arch: Arch) -> Result<CostTriple, ModExpError> {
    let ac = argset_cost(w)?;
    Ok(match arch {
        Arch::Ac => ac,
        Arch::Ntc => CostTriple::new(0.0, 5.0 * ac.ccnot + ac.cnot, ac.not)
            .with_concurrency(ac.concurrency)
            .with_space(ac.space),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn times(a: AdderModel, n: usize, arch: Arch) -> (f64, f64, f64) {
        adder_latency(a, n, arch).unwrap().times()
    }

    #[test]
    fn ripple_adders() {
        assert_eq!(times(AdderModel::Vbe, 128, Arch::Ac), (381.0, 253.0, 0.0));
        assert_eq!(times(AdderModel::Vbe, 3, Arch::Ntc), (0.0, 45.0, 0.0));
        assert_eq!(times(AdderModel::Vbe, 128, Arch::Ntc), (0.0, 2545.0, 0.0));
        assert_eq!(times(AdderModel::Cdkm, 10, Arch::Ntc), (0.0, 105.0, 0.0));
    }

    #[test]
    fn log_depth_adders() {
        assert_eq!(times(AdderModel::Qcla, 128, Arch::Ac), (31.0, 4.0, 2.0));
        assert_eq!(times(AdderModel::csum_for(128, 4), 128, Arch::Ac), (30.0, 4.0, 22.0));
        assert_eq!(times(AdderModel::Csum { m: 2, g: 8 }, 16, Arch::Ac), (18.0, 4.0, 14.0));
        assert_eq!(adder_latency(AdderModel::Csum { m: 2, g: 8 }, 16, Arch::Ac).unwrap().space, 99.0);
    }

    #[test]
    fn unsupported_pairs() {
        for a in [AdderModel::Qcla, AdderModel::csum_for(16, 2), AdderModel::Bcdp] {
            assert!(matches!(adder_latency(a, 16, Arch::Ntc), Err(ModExpError::Unsupported { .. })));
        }
    }

    #[test]
    fn csla_optimum() {
        assert_eq!(optimal_csla_m(40), 8);
        // the closed form really is smallest there (up to rounding of g)
        let n: usize = 40;
        let best = (1..n)
            .filter(|&m| n.div_ceil(m) >= 2 && (n.div_ceil(m) - 1) * m < n)
            .min_by(|&a, &b| {
                let t = |m| adder_latency(AdderModel::csla_for(n, m), n, Arch::Ac).unwrap().ccnot;
                t(a).partial_cmp(&t(b)).unwrap()
            })
            .unwrap();
        assert!(best.abs_diff(8) <= 1, "best m = {best}");
    }

    #[test]
    fn argset_on_ntc() {
        assert_eq!(argset_latency(4, Arch::Ntc).unwrap().times(), (0.0, 240.0, 16.0));
    }
}
