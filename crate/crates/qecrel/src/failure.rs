//! Block and algorithm failure probabilities and their inversion.
//!
//! Only the lowest failure mode is counted: a block with an [[n,k,d]] code
//! fails when exactly m = (d+1)/2 of its qubits fail. Heavier error patterns
//! are far less likely for small p and are ignored, in both the exact and the
//! approximate forms.

use std::fmt;

use crate::{CodeStack, Code, QecError};

/// C(n, m) as a float (exact for every code size used here).
pub fn binomial(n: u32, m: u32) -> f64 {
    if m > n {
        return 0.0;
    }
    let m = m.min(n - m);
    (0..m).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// Probability that a block suffers exactly (d+1)/2 errors:
/// C(n,m)(1−p)^(n−m)p^m, or C(n,m)p^m when `exact` is false.
pub fn p_block(code: &Code, p: f64, exact: bool) -> f64 {
    let m = code.failure_weight();
    let base = binomial(code.n, m) * p.powi(m as i32);
    if exact {
        base * (1.0 - p).powi((code.n - m) as i32)
    } else {
        base
    }
}

/// 1 − (1 − q)^t without cancellation for tiny q.
fn any_of(t: f64, q: f64) -> f64 {
    if q >= 1.0 {
        return 1.0;
    }
    -(t * (-q).ln_1p()).exp_m1()
}

/// Approximate failure probability of a computation with `t` logical
/// teleportations.
///
/// * no code: 1 − (1 − p)^t
/// * one level: t·C(n,m)p^m
/// * two levels: t·C(n_o,m_o)·(C(n_i,m_i)p^{m_i})^{m_o}
///
/// The linearised forms can exceed 1 for large p; the result is capped there.
pub fn p_alg(t: f64, stack: &CodeStack, p: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if stack.is_bare() {
        return any_of(t, p);
    }
    let inner = p_block(&stack.inner, p, false);
    let block = match stack.outer {
        None => inner,
        Some(o) => p_block(&o, inner, false),
    };
    (t * block).min(1.0)
}

/// Same model without the small-p shortcuts: exact lowest-mode block
/// probabilities, an outer block fed with the inner blocks' failure rate, and
/// 1 − (1 − p_block)^t for the whole computation.
pub fn p_alg_exact(t: f64, stack: &CodeStack, p: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let inner = p_block(&stack.inner, p, true);
    let block = match stack.outer {
        None => inner,
        Some(o) => p_block(&o, inner, true),
    };
    any_of(t, block)
}

/// The tolerable teleportation error rate in closed form,
/// p_t = 1 / (coefficient · t^(1/root)).
///
/// The approximate p_alg is K·t·p^E (K = 1, E = 1 without a code), so
/// p_t = (target / (K t))^(1/E): the coefficient is (K/target)^(1/E) and the
/// root is E.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PtBound {
    pub coefficient: f64,
    pub root: u32,
}

impl PtBound {
    pub fn of(stack: &CodeStack, target: f64) -> Result<PtBound, QecError> {
        if !(target > 0.0 && target < 1.0) && target != 1.0 {
            return Err(QecError::Target(target));
        }
        let (k, e) = prefactor(stack);
        Ok(PtBound { coefficient: (k / target).powf(1.0 / f64::from(e)), root: e })
    }

    pub fn at(&self, t: f64) -> f64 {
        1.0 / (self.coefficient * t.powf(1.0 / f64::from(self.root)))
    }
}

impl fmt::Display for PtBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root == 1 {
            write!(f, "{}/t", 1.0 / self.coefficient)
        } else {
            write!(f, "1/({:.3}·t^(1/{}))", self.coefficient, self.root)
        }
    }
}

/// (K, E) with p_alg ≈ K·t·p^E.
fn prefactor(stack: &CodeStack) -> (f64, u32) {
    if stack.is_bare() {
        return (1.0, 1);
    }
    let (i, mi) = (stack.inner, stack.inner.failure_weight());
    let ki = binomial(i.n, mi);
    match stack.outer {
        None => (ki, mi),
        Some(o) => {
            let mo = o.failure_weight();
            (binomial(o.n, mo) * ki.powi(mo as i32), mi * mo)
        }
    }
}

/// Largest p_t with approximate p_alg ≤ `target`, by inverting the closed
/// form. `target` = 1 is accepted and gives the "p_t ≪ …" scale.
pub fn required_pt(stack: &CodeStack, t: f64, target: f64) -> Result<f64, QecError> {
    if t < 1.0 {
        return Err(QecError::NoTeleports);
    }
    Ok(PtBound::of(stack, target)?.at(t))
}

/// Largest p_t with [`p_alg_exact`] ≤ `target`, found by bisection.
///
/// The lowest-mode block probability rises only up to p = m/n, so the search
/// stays below that point for both levels; a target that cannot be reached
/// there is an error.
pub fn required_pt_exact(stack: &CodeStack, t: f64, target: f64) -> Result<f64, QecError> {
    if t < 1.0 {
        return Err(QecError::NoTeleports);
    }
    if !(target > 0.0 && target < 1.0) {
        return Err(QecError::Target(target));
    }
    let peak = |c: &Code| f64::from(c.failure_weight()) / f64::from(c.n);
    let mut hi = if stack.is_bare() { 1.0 } else { peak(&stack.inner) };
    if let Some(o) = stack.outer {
        while p_block(&stack.inner, hi, true) > peak(&o) {
            hi /= 2.0;
        }
    }
    let f = |p: f64| p_alg_exact(t, stack, p);
    if f(hi) < target {
        return Err(QecError::Target(target));
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) <= target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}
