//! Required teleportation error rates for a choice of code stacks.

use qecrel::{required_pt, required_pt_exact, Code, CodeStack, TELEPORT_COUNTS};

use crate::output::Table;
use crate::{CliError, RunConfig};

pub fn default_stacks() -> Vec<CodeStack> {
    let (s, g) = (Code::STEANE, Code::GOLAY);
    vec![
        CodeStack::none(),
        CodeStack::single(s),
        CodeStack::single(g),
        CodeStack::concat(s, s),
        CodeStack::concat(g, s),
        CodeStack::concat(s, g),
        CodeStack::concat(g, g),
    ]
}

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    let stacks = cfg.codes.clone().unwrap_or_else(default_stacks);
    let counts = cfg.t.clone().unwrap_or_else(|| TELEPORT_COUNTS.to_vec());
    let target = cfg.target.unwrap_or(0.1);
    let mut t = Table::new(&["code", "scale_up", "teleports", "target", "p_t", "p_t_exact"]);
    for stack in &stacks {
        for &n in &counts {
            t.push(vec![
                stack.to_string().into(),
                stack.scale_up().into(),
                n.into(),
                target.into(),
                required_pt(stack, n, target)?.into(),
                required_pt_exact(stack, n, target)?.into(),
            ]);
        }
    }
    Ok(t)
}
