//! The (CCNOT; CNOT; NOT)#(concurrency; space) cost notation.
//!
//! Components are gate counts or gate-time counts depending on context:
//! a sequential total counts every gate, a scheduled depth counts time steps
//! by their slowest gate. Values are `f64` because closed-form models produce
//! fractional averages (for example per-addition adder calls).

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CostTriple {
    pub ccnot: f64,
    pub cnot: f64,
    pub not: f64,
    pub concurrency: f64,
    pub space: f64,
}

impl CostTriple {
    pub const ZERO: CostTriple = CostTriple {
        ccnot: 0.0,
        cnot: 0.0,
        not: 0.0,
        concurrency: 0.0,
        space: 0.0,
    };

    pub fn new(ccnot: f64, cnot: f64, not: f64) -> Self {
        CostTriple {
            ccnot,
            cnot,
            not,
            ..CostTriple::ZERO
        }
    }

    pub fn with_concurrency(mut self, c: f64) -> Self {
        self.concurrency = c;
        self
    }

    pub fn with_space(mut self, s: f64) -> Self {
        self.space = s;
        self
    }

    /// Only the three time components, for comparisons that ignore the
    /// concurrency/space annotations.
    pub fn times(&self) -> (f64, f64, f64) {
        (self.ccnot, self.cnot, self.not)
    }

    /// Sum of the three components, i.e. the total number of gate times when
    /// every gate takes one unit.
    pub fn total(&self) -> f64 {
        self.ccnot + self.cnot + self.not
    }
}

impl Add for CostTriple {
    type Output = CostTriple;

    /// Adds times; concurrency and space combine by maximum, as when two
    /// blocks run one after the other on the same machine.
    fn add(self, o: CostTriple) -> CostTriple {
        CostTriple {
            ccnot: self.ccnot + o.ccnot,
            cnot: self.cnot + o.cnot,
            not: self.not + o.not,
            concurrency: self.concurrency.max(o.concurrency),
            space: self.space.max(o.space),
        }
    }
}

impl AddAssign for CostTriple {
    fn add_assign(&mut self, o: CostTriple) {
        *self = *self + o;
    }
}

impl Mul<f64> for CostTriple {
    type Output = CostTriple;

    /// Repeats the block `k` times: times scale, annotations do not.
    fn mul(self, k: f64) -> CostTriple {
        CostTriple {
            ccnot: self.ccnot * k,
            cnot: self.cnot * k,
            not: self.not * k,
            ..self
        }
    }
}

fn num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

impl fmt::Display for CostTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", num(self.ccnot), num(self.cnot), num(self.not))?;
        if self.concurrency != 0.0 || self.space != 0.0 {
            write!(f, "#({}; {})", num(self.concurrency), num(self.space))?;
        }
        Ok(())
    }
}
