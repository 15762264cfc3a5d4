//! Complete exponentiation algorithms and their cost reports.
//!
//! cVBE is the bit-serial construction with five adder blocks per modular
//! addition and a concurrent VBE adder: 20n² − 5n adder calls. BCDP is
//! taken as its closed-form total. D–G share one template: R_I multiplier
//! calls (parallel multipliers, w-bit exponent words), R_M adder calls per
//! multiplication, each adder call preceded by loading its argument, and
//! the final modulo reduction of the overflow strategy:
//!
//!   t = R_I · R_M · (t_adder + t_arg) + cleanup · t_adder
//!
//! Space is s multipliers of (adder + 2^w enables + 1 + p + k·n) qubits plus
//! the 2n+1-qubit exponent register, where k counts the n-bit registers
//! held per multiplier beside the adder: one for the conditional-sum
//! multiplier (its adder already holds both operands and a result) and for
//! the three-block modulo of G, two for the in-place adders used with the
//! overflow strategy.

use std::fmt;
use std::str::FromStr;

use revsim::CostTriple;

use crate::adder::{adder_latency, argset_latency, AdderModel, Arch};
use crate::calls::{modadd_calls, mult_calls, ExponentLength, ModuloStrategy};
use crate::kq::modexp_kq;
use crate::ModExpError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    CVbe,
    Bcdp,
    D,
    E,
    F,
    G,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] =
        [Algorithm::CVbe, Algorithm::Bcdp, Algorithm::D, Algorithm::E, Algorithm::F, Algorithm::G];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::CVbe => "cVBE",
            Algorithm::Bcdp => "BCDP",
            Algorithm::D => "D",
            Algorithm::E => "E",
            Algorithm::F => "F",
            Algorithm::G => "G",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = ModExpError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ModExpError::Param(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModExpConfig {
    pub algorithm: Algorithm,
    pub n: usize,
    /// Exponent word length for indirection.
    pub w: usize,
    /// Parallel multipliers.
    pub s: usize,
    /// Overflow qubits (0 when the algorithm reduces every addition).
    pub p: u32,
    /// Additions between modulo reductions.
    pub b: u64,
    /// Group size for carry-select style adders.
    pub m: usize,
    pub arch: Arch,
    pub exponent: ExponentLength,
}

impl ModExpConfig {
    /// The parameter choices of the 100n-space design study (s is capped
    /// at n, and the CSUM group size shrinks for tiny n so that there are
    /// at least three groups).
    pub fn preset(algorithm: Algorithm, n: usize, arch: Arch) -> Self {
        let (w, s, p, b) = match algorithm {
            Algorithm::CVbe | Algorithm::Bcdp => (1, 1, 0, 1),
            Algorithm::D => (2, 12, 11, 1024),
            Algorithm::E => (2, 16, 10, 512),
            Algorithm::F => (4, 20, 10, 512),
            Algorithm::G => (4, 1, 0, 1),
        };
        let mut m = 4;
        while m > 1 && n.div_ceil(m) < 3 {
            m /= 2;
        }
        ModExpConfig {
            algorithm,
            n,
            w,
            s: s.min(n.max(1)),
            p,
            b,
            m,
            arch,
            exponent: ExponentLength::Words,
        }
    }

    pub fn adder(&self) -> AdderModel {
        match self.algorithm {
            Algorithm::CVbe => AdderModel::Vbe,
            Algorithm::Bcdp => AdderModel::Bcdp,
            Algorithm::D => AdderModel::csum_for(self.n, self.m),
            Algorithm::E => AdderModel::Qcla,
            Algorithm::F | Algorithm::G => AdderModel::Cdkm,
        }
    }

    pub fn modulo(&self) -> ModuloStrategy {
        match self.algorithm {
            Algorithm::CVbe | Algorithm::Bcdp => ModuloStrategy::Vbe5,
            Algorithm::G => ModuloStrategy::Ema3,
            _ => ModuloStrategy::Overflow { p: self.p, b: self.b },
        }
    }

    /// n-bit registers per multiplier besides the adder (see module docs).
    fn registers(&self) -> usize {
        match self.algorithm {
            Algorithm::E | Algorithm::F => 2,
            _ => 1,
        }
    }

    pub fn validate(&self) -> Result<(), ModExpError> {
        if self.n < 2 {
            return Err(ModExpError::Param(format!("n = {} is too small", self.n)));
        }
        if self.s == 0 || self.s > self.n {
            return Err(ModExpError::Param(format!("s = {} must be in 1..={}", self.s, self.n)));
        }
        if matches!(self.algorithm, Algorithm::CVbe | Algorithm::Bcdp) {
            if self.w != 1 || self.s != 1 {
                return Err(ModExpError::Param(format!("{} has no indirection or parallel multipliers", self.algorithm)));
            }
        } else if !(2..=4).contains(&self.w) {
            return Err(adders::AdderError::WordLength(self.w).into());
        }
        if let ModuloStrategy::Overflow { .. } = self.modulo() {
            modadd_calls(self.n, self.modulo())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CostReport {
    pub config: ModExpConfig,
    /// Latency, with concurrency and space annotations.
    pub latency: CostTriple,
    pub space: usize,
    pub adder_calls: Option<f64>,
    pub mult_calls: Option<u64>,
    pub kq: Option<f64>,
    /// Speed-up over cVBE at the same n and architecture: Toffoli times on
    /// AC, two-qubit gate times on NTC.
    pub perf: f64,
}

fn cvbe_calls(n: usize) -> f64 {
    let n = n as f64;
    20.0 * n * n - 5.0 * n
}

struct Core {
    latency: CostTriple,
    space: usize,
    concurrency: usize,
    adder_calls: Option<f64>,
    mult_calls: Option<u64>,
}

fn core(cfg: &ModExpConfig) -> Result<Core, ModExpError> {
    cfg.validate()?;
    let n = cfg.n;
    let nf = n as f64;
    let adder = cfg.adder();
    Ok(match cfg.algorithm {
        Algorithm::CVbe => {
            let calls = cvbe_calls(n);
            Core {
                latency: adder_latency(adder, n, cfg.arch)? * calls,
                space: 7 * n + 1,
                concurrency: 2,
                adder_calls: Some(calls),
                mult_calls: Some(2 * n as u64),
            }
        }
        Algorithm::Bcdp => {
            if cfg.arch == Arch::Ntc {
                return Err(ModExpError::Unsupported { adder: adder.to_string(), arch: cfg.arch });
            }
            let t = CostTriple::new(
                54.0 * nf.powi(3) - 127.0 * nf * nf + 108.0 * nf - 29.0,
                10.0 * nf.powi(3) + 15.0 * nf * nf - 38.0 * nf + 14.0,
                20.0 * nf.powi(3) - 38.0 * nf * nf + 22.0 * nf - 4.0,
            );
            Core { latency: t, space: 5 * n + 3, concurrency: 2, adder_calls: None, mult_calls: None }
        }
        _ => {
            let t_add = adder_latency(adder, n, cfg.arch)?;
            let t_arg = argset_latency(cfg.w, cfg.arch)?;
            let r_i = mult_calls(n, cfg.s, cfg.w, cfg.exponent)?;
            let calls = modadd_calls(n, cfg.modulo())?;
            let per_run = r_i as f64 * calls.per_multiplication;
            let latency = (t_add + t_arg) * per_run + t_add * calls.cleanup as f64;
            let per_mult = adder.space(n)? + (1 << cfg.w) + 1 + cfg.p as usize + cfg.registers() * n;
            Core {
                latency,
                space: cfg.s * per_mult + 2 * n + 1,
                concurrency: cfg.s * adder.concurrency(n),
                adder_calls: Some(per_run + calls.cleanup as f64),
                mult_calls: Some(r_i),
            }
        }
    })
}

/// Latency, space, call counts, KQ and relative performance of `cfg`.
pub fn modexp_latency(cfg: &ModExpConfig) -> Result<CostReport, ModExpError> {
    let c = core(cfg)?;
    let base = core(&ModExpConfig::preset(Algorithm::CVbe, cfg.n, cfg.arch))?;
    let metric = |t: &CostTriple| match cfg.arch {
        Arch::Ac => t.ccnot,
        Arch::Ntc => t.cnot,
    };
    Ok(CostReport {
        config: *cfg,
        latency: c.latency.with_concurrency(c.concurrency as f64).with_space(c.space as f64),
        space: c.space,
        adder_calls: c.adder_calls,
        mult_calls: c.mult_calls,
        kq: modexp_kq(cfg.algorithm, cfg.n, cfg.w),
        perf: metric(&base.latency) / metric(&c.latency),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(a: Algorithm, arch: Arch) -> CostReport {
        modexp_latency(&ModExpConfig::preset(a, 128, arch)).unwrap()
    }

    #[test]
    fn algorithm_d_exact() {
        let r = report(Algorithm::D, Arch::Ac);
        assert_eq!(r.latency.times(), (218696.25, 25744.5, 167207.25));
        assert_eq!(r.space, 11969);
        assert_eq!(r.latency.concurrency, 1512.0);
    }

    #[test]
    fn cvbe_totals() {
        let r = report(Algorithm::CVbe, Arch::Ac);
        assert_eq!(r.latency.times(), (327040.0 * 381.0, 327040.0 * 253.0, 0.0));
        assert_eq!(r.space, 897);
        assert_eq!(r.perf, 1.0);
        let ntc = report(Algorithm::CVbe, Arch::Ntc);
        // 400n³ − 400n² + 75n
        let n = 128f64;
        assert_eq!(ntc.latency.cnot, 400.0 * n.powi(3) - 400.0 * n * n + 75.0 * n);
    }

    #[test]
    fn spaces() {
        assert_eq!(report(Algorithm::E, Arch::Ac).space, 12657);
        assert_eq!(report(Algorithm::F, Arch::Ac).space, 11077);
        assert_eq!(report(Algorithm::G, Arch::Ac).space, 660);
    }

    #[test]
    fn ntc_gaps() {
        for a in [Algorithm::D, Algorithm::E, Algorithm::Bcdp] {
            assert!(matches!(
                modexp_latency(&ModExpConfig::preset(a, 128, Arch::Ntc)),
                Err(ModExpError::Unsupported { .. })
            ));
        }
    }

    #[test]
    fn rejects_bad_overflow() {
        let mut c = ModExpConfig::preset(Algorithm::F, 128, Arch::Ac);
        c.b = 1024;
        assert!(matches!(modexp_latency(&c), Err(ModExpError::OverflowBound { .. })));
        c.b = 512;
        c.w = 5;
        assert!(modexp_latency(&c).is_err());
    }

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
    }
}
