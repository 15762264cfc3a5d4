//! Scaling one timed addition up to a full modular exponentiation.

use crate::published::{ADDER_CALLS, SIZES};
use crate::{dist_adder_comm, latency_baseline, latency_timed, CommMethod, DistAdder, MultinetError, TimingParams, TopologyKind};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModExpTime {
    pub calls: u64,
    /// Tabulated call count at this width, if any.
    pub published_calls: Option<f64>,
    pub adder_ns: f64,
    pub seconds: f64,
    /// Fewest and most teleportations over the adders and networks.
    pub teleports: (f64, f64),
}

/// Adder calls with four-bit exponent windows and a modulus large enough
/// that the reduction steps cost nothing extra: 2n².
pub fn adder_calls(n: usize) -> u64 {
    2 * (n as u64).pow(2)
}

/// Total teleportations of a full run. The low end is the cheaper ripple
/// adder's teleport count; the high end is the lookahead's, read off its bus
/// column where every teleport is serialized and latency equals the count.
/// Widths the lookahead does not support fall back to the ripple maximum.
pub fn teleport_range(n: usize) -> Result<(f64, f64), MultinetError> {
    let ripple: Vec<u64> = [DistAdder::Vbe, DistAdder::Cdkm]
        .into_iter()
        .map(|a| dist_adder_comm(a, CommMethod::Teledata, TopologyKind::Bus, n))
        .collect::<Result<_, _>>()?;
    let lo = *ripple.iter().min().unwrap_or(&0) as f64;
    let hi = match latency_baseline(DistAdder::Qcla, TopologyKind::Bus, n, CommMethod::Teledata) {
        Ok(c) => c.value as f64,
        Err(_) => *ripple.iter().max().unwrap_or(&0) as f64,
    };
    let calls = adder_calls(n) as f64;
    Ok((calls * lo, calls * hi))
}

pub fn full_modexp_time(
    n: usize,
    adder: DistAdder,
    topology: TopologyKind,
    timing: &TimingParams,
) -> Result<ModExpTime, MultinetError> {
    let adder_ns = latency_timed(adder, topology, n, CommMethod::Teledata, timing)?.ns;
    let calls = adder_calls(n);
    let published_calls = SIZES.iter().position(|&s| s == n).map(|i| ADDER_CALLS[i].1);
    Ok(ModExpTime {
        calls,
        published_calls,
        adder_ns,
        seconds: calls as f64 * adder_ns * 1e-9,
        teleports: teleport_range(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calls() {
        assert_eq!(adder_calls(1024), 2_097_152);
        assert_eq!(adder_calls(16), 512);
    }
}
