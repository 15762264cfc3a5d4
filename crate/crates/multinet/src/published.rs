//! Reference values for the distributed tables, kept next to the model so
//! every computed cell can be compared with the number it should reproduce.
//!
//! Rows are indexed by width 16, 128 and 1024.

use crate::{CommMethod, DistAdder, TopologyKind};

use CommMethod::{Baseline as B, Telegate as G, Teledata as D};
use DistAdder::{Cdkm, Qcla, Vbe};
use TopologyKind::{Bus, Fully, Line, TwoBus, TwoFully};

pub type Row = (DistAdder, CommMethod, TopologyKind, [u64; 3]);

/// Whole-teleportation latencies (EPR creation on demand).
pub const MONOLITHIC: &[Row] = &[
    (Vbe, B, Bus, [360, 3048, 24552]),
    (Vbe, B, Line, [305, 2545, 20465]),
    (Vbe, B, Fully, [182, 1526, 12278]),
    (Vbe, G, Bus, [105, 889, 7161]),
    (Vbe, G, TwoBus, [105, 889, 7161]),
    (Vbe, G, Line, [105, 889, 7161]),
    (Vbe, G, Fully, [105, 889, 7161]),
    (Vbe, G, TwoFully, [105, 889, 7161]),
    (Vbe, D, Bus, [30, 254, 2046]),
    (Vbe, D, TwoBus, [30, 254, 2046]),
    (Vbe, D, Line, [30, 254, 2046]),
    (Vbe, D, Fully, [30, 254, 2046]),
    (Vbe, D, TwoFully, [30, 254, 2046]),
    (Cdkm, B, Bus, [232, 1912, 15352]),
    (Cdkm, B, Line, [160, 1280, 10240]),
    (Cdkm, B, Fully, [160, 1280, 10240]),
    (Cdkm, G, Bus, [138, 1146, 9210]),
    (Cdkm, G, TwoBus, [96, 768, 6144]),
    (Cdkm, G, Line, [96, 768, 6144]),
    (Cdkm, G, Fully, [97, 768, 6145]),
    (Cdkm, G, TwoFully, [96, 768, 6144]),
    (Cdkm, D, Bus, [90, 762, 6138]),
    (Cdkm, D, TwoBus, [60, 508, 4092]),
    (Cdkm, D, Line, [34, 258, 2050]),
    (Cdkm, D, Fully, [90, 762, 6138]),
    (Cdkm, D, TwoFully, [34, 258, 2050]),
    (Qcla, B, Bus, [644, 6557, 54806]),
    (Qcla, B, Fully, [99, 159, 219]),
    (Qcla, G, Bus, [444, 4901, 41502]),
    (Qcla, G, TwoBus, [222, 2451, 20751]),
    (Qcla, G, Fully, [136, 256, 376]),
    (Qcla, G, TwoFully, [135, 255, 375]),
    (Qcla, D, Bus, [260, 3176, 27260]),
    (Qcla, D, TwoBus, [178, 2028, 17206]),
    (Qcla, D, Fully, [96, 192, 288]),
    (Qcla, D, TwoFully, [56, 104, 152]),
];

/// EPR-creation latencies with pairs made ahead of time and free local work.
pub const DECOMPOSED: &[Row] = &[
    (Vbe, B, Bus, [360, 3048, 24552]),
    (Vbe, B, Line, [16, 16, 16]),
    (Vbe, B, Fully, [16, 16, 16]),
    (Vbe, G, Bus, [105, 889, 7161]),
    (Vbe, G, TwoBus, [53, 445, 3581]),
    (Vbe, G, Line, [7, 7, 7]),
    (Vbe, G, Fully, [14, 14, 14]),
    (Vbe, G, TwoFully, [7, 7, 7]),
    (Vbe, D, Bus, [30, 254, 2046]),
    (Vbe, D, TwoBus, [15, 127, 1023]),
    (Vbe, D, Line, [2, 2, 2]),
    (Vbe, D, Fully, [4, 4, 4]),
    (Vbe, D, TwoFully, [2, 2, 2]),
    (Cdkm, B, Bus, [232, 1912, 15352]),
    (Cdkm, B, Line, [21, 21, 21]),
    (Cdkm, B, Fully, [19, 19, 19]),
    (Cdkm, G, Bus, [135, 1146, 9210]),
    (Cdkm, G, TwoBus, [68, 573, 4605]),
    (Cdkm, G, Line, [11, 11, 11]),
    (Cdkm, G, Fully, [18, 18, 18]),
    (Cdkm, G, TwoFully, [9, 9, 9]),
    (Cdkm, D, Bus, [90, 762, 6138]),
    (Cdkm, D, TwoBus, [60, 508, 4092]),
    (Cdkm, D, Line, [6, 6, 6]),
    (Cdkm, D, Fully, [12, 12, 12]),
    (Cdkm, D, TwoFully, [6, 6, 6]),
    (Qcla, B, Bus, [644, 6557, 54806]),
    (Qcla, B, Fully, [99, 159, 219]),
    (Qcla, G, Bus, [444, 4901, 41502]),
    (Qcla, G, TwoBus, [222, 2451, 20751]),
    (Qcla, G, Fully, [89, 149, 209]),
    (Qcla, G, TwoFully, [45, 75, 105]),
    (Qcla, D, Bus, [260, 3176, 27260]),
    (Qcla, D, TwoBus, [178, 2028, 17206]),
    (Qcla, D, Fully, [96, 192, 288]),
    (Qcla, D, TwoFully, [56, 104, 152]),
];

pub const SIZES: [usize; 3] = [16, 128, 1024];

pub fn lookup(table: &[Row], adder: DistAdder, method: CommMethod, topology: TopologyKind, n: usize) -> Option<u64> {
    let col = SIZES.iter().position(|&s| s == n)?;
    table
        .iter()
        .find(|r| r.0 == adder && r.1 == method && r.2 == topology)
        .map(|r| r.3[col])
}

/// Adder calls for a complete exponentiation, as tabulated.
pub const ADDER_CALLS: [(usize, f64); 3] = [(16, 481.0), (128, 32544.0), (1024, 2.1e6)];

/// Total teleportations for a complete exponentiation, low and high ends.
pub const TELEPORT_TOTALS: [(usize, f64, f64); 3] =
    [(16, 14_000.0, 125_000.0), (128, 8e6, 1e8), (1024, 4e9, 6e10)];

/// Wall-clock seconds for one complete run at EPR times 10, 160 and 1280 ns:
/// CDKM on a line, then carry-lookahead on 2fully.
pub const RUN_SECONDS: [(usize, [f64; 3], [f64; 3]); 3] = [
    (16, [960e-6, 1.4e-3, 4.6e-3], [1.0e-3, 2.5e-3, 14e-3]),
    (128, [0.5, 0.53, 0.75], [0.125, 0.29, 1.5]),
    (1024, [260.0, 260.0, 270.0], [12.0, 26.0, 130.0]),
];

pub const RUN_EPR_NS: [f64; 3] = [10.0, 160.0, 1280.0];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_cover_the_same_cells() {
        assert_eq!(MONOLITHIC.len(), 36);
        for (m, d) in MONOLITHIC.iter().zip(DECOMPOSED) {
            assert_eq!((m.0, m.1, m.2), (d.0, d.1, d.2));
        }
        assert_eq!(lookup(MONOLITHIC, Cdkm, D, Line, 1024), Some(2050));
        assert_eq!(lookup(MONOLITHIC, Qcla, D, Line, 16), None);
        assert_eq!(lookup(MONOLITHIC, Vbe, D, Line, 32), None);
    }
}
