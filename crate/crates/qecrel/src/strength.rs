//! The tolerable-error-rate table: for each code stack and number of logical
//! teleportations, the teleport error rate that keeps the computation's
//! failure probability below a target.

use crate::{required_pt, Code, CodeStack, PtBound, QecError};

/// Numbers of logical teleportations tabulated.
pub const TELEPORT_COUNTS: [f64; 3] = [1e5, 1e8, 1e11];

/// One row group of the table: the stacks it covers, the failure target the
/// row's closed form corresponds to, and the values printed for each entry of
/// [`TELEPORT_COUNTS`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StrengthRow {
    pub stacks: &'static [CodeStack],
    pub target: f64,
    pub printed: [&'static str; 3],
}

const S: Code = Code::STEANE;
const G: Code = Code::GOLAY;

/// Published register. The single-level Steane row is stated as
/// p_t ≪ 1/√(21t), i.e. at a failure probability of order one; every other
/// row is at 0.1. The two mixed stacks share a row.
pub const STRENGTH_ROWS: [StrengthRow; 6] = [
    StrengthRow { stacks: &[CodeStack { inner: Code::BARE, outer: None }], target: 0.1, printed: ["1e-6", "1e-9", "1e-12"] },
    StrengthRow { stacks: &[CodeStack { inner: S, outer: None }], target: 1.0, printed: ["7e-4", "2e-5", "7e-7"] },
    StrengthRow { stacks: &[CodeStack { inner: G, outer: None }], target: 0.1, printed: ["3e-3", "6e-4", "1e-4"] },
    StrengthRow { stacks: &[CodeStack { inner: S, outer: Some(S) }], target: 0.1, printed: ["3e-3", "6e-4", "1e-4"] },
    StrengthRow {
        stacks: &[CodeStack { inner: G, outer: Some(S) }, CodeStack { inner: S, outer: Some(G) }],
        target: 0.1,
        printed: ["0.012", "5e-3", "2e-3"],
    },
    StrengthRow { stacks: &[CodeStack { inner: G, outer: Some(G) }], target: 0.1, printed: ["0.025", "0.016", "0.010"] },
];

/// One computed cell.
#[derive(Clone, Debug, PartialEq)]
pub struct StrengthCell {
    pub stack: CodeStack,
    pub scale_up: u32,
    pub t: f64,
    pub target: f64,
    pub bound: PtBound,
    pub p_t: f64,
    pub printed: &'static str,
    pub matches: bool,
}

/// Every (stack, t) cell of the table, computed by inverting the
/// approximate failure model; 21 cells, since the shared row is evaluated
/// for both of its stacks.
pub fn strength_table() -> Result<Vec<StrengthCell>, QecError> {
    let mut out = Vec::new();
    for row in &STRENGTH_ROWS {
        for stack in row.stacks {
            let bound = PtBound::of(stack, row.target)?;
            for (&t, &printed) in TELEPORT_COUNTS.iter().zip(&row.printed) {
                let p_t = required_pt(stack, t, row.target)?;
                out.push(StrengthCell {
                    stack: *stack,
                    scale_up: stack.scale_up(),
                    t,
                    target: row.target,
                    bound,
                    p_t,
                    printed,
                    matches: matches_printed(p_t, printed),
                });
            }
        }
    }
    Ok(out)
}

/// Rounds to `digits` significant figures.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x)
}

/// True when `x` rounded to the significant figures of `printed` equals it
/// ("0.010" has two, "6e-4" one).
pub fn matches_printed(x: f64, printed: &str) -> bool {
    let Ok(value) = printed.parse::<f64>() else { return false };
    let mantissa = printed.split(['e', 'E']).next().unwrap_or("");
    let digits = mantissa.chars().filter(char::is_ascii_digit).skip_while(|&c| c == '0').count();
    round_sig(x, digits.max(1)) == round_sig(value, digits.max(1))
}
