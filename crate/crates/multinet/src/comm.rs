//! Remote-operation counts of the distributed adders.

use crate::{CommMethod, DistAdder, MultinetError, TopologyKind};

/// Teleportations (teledata) or gate teleportations (telegate) one addition
/// needs with the operands split over `m` nodes, one bit slice per node.
///
/// The carry-lookahead count is the total over the whole network: each
/// Toffoli with controls on two other nodes costs two operand round trips
/// (teledata) or one remote gate (telegate), and the n−2 remote CNOTs of the
/// sum stage one each.
pub fn dist_adder_comm(
    adder: DistAdder,
    method: CommMethod,
    topology: TopologyKind,
    m: usize,
) -> Result<u64, MultinetError> {
    adder.check(topology, m)?;
    let m = m as u64;
    let k = m.trailing_zeros() as u64;
    Ok(match (adder, method) {
        (_, CommMethod::Baseline) => {
            return Err(MultinetError::NotAvailable { method, topology });
        }
        (DistAdder::Vbe, CommMethod::Teledata) => 2 * m - 2,
        (DistAdder::Vbe, CommMethod::Telegate) => 7 * m - 7,
        (DistAdder::Cdkm, CommMethod::Teledata) => 2 * m + 2,
        (DistAdder::Cdkm, CommMethod::Telegate) => 6 * m,
        (DistAdder::Qcla, CommMethod::Teledata) => 4 * three_node_toffolis(m, k) + 2 * (m - 2),
        (DistAdder::Qcla, CommMethod::Telegate) => three_node_toffolis(m, k) + (m - 2),
    })
}

/// Toffolis of the lookahead whose three qubits sit on three nodes.
pub(crate) fn three_node_toffolis(n: u64, k: u64) -> u64 {
    8 * n - 9 * k - 8
}
