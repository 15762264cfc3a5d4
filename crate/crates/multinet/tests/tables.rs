//! Unit-cost tables: reference cells, provenance rules and orderings.

use multinet::{
    dist_adder_comm, latency_baseline, latency_decomposed, table_cells, CommMethod, DistAdder, Provenance, TableKind,
    TopologyKind, TABLE_SIZES,
};

use CommMethod::{Telegate, Teledata};
use DistAdder::{Cdkm, Qcla, Vbe};
use TopologyKind::*;

#[test]
fn reference_cells() {
    for t in TopologyKind::ALL {
        assert_eq!(latency_baseline(Vbe, t, 16, Teledata).unwrap().value, 30);
    }
    assert_eq!(latency_baseline(Cdkm, Line, 1024, Teledata).unwrap().value, 2050);
    assert_eq!(latency_baseline(Qcla, TwoFully, 1024, Teledata).unwrap().value, 152);
    for n in [16, 128, 1024, 40] {
        assert_eq!(latency_decomposed(Vbe, Line, n, Teledata).unwrap().value, 2);
        assert_eq!(latency_decomposed(Cdkm, Line, n, Teledata).unwrap().value, 6);
    }
    let q = latency_decomposed(Qcla, Fully, 1024, Teledata).unwrap();
    assert_eq!(q.value, 288);
    assert_eq!(q.value, latency_baseline(Qcla, Fully, 1024, Teledata).unwrap().value);
}

#[test]
fn line_and_fully_teledata_cells_are_computed() {
    for n in TABLE_SIZES {
        for kind in [TableKind::Monolithic, TableKind::Decomposed] {
            for c in table_cells(kind, n).unwrap() {
                if c.method == Teledata && matches!(c.topology, Line | Fully | TwoFully) {
                    assert_eq!(c.cell.provenance, Provenance::Computed, "{c:?}");
                }
            }
        }
    }
}

#[test]
fn only_the_cdkm_two_bus_teledata_cells_disagree() {
    let mut misses = Vec::new();
    for kind in [TableKind::Monolithic, TableKind::Decomposed] {
        for n in TABLE_SIZES {
            for c in table_cells(kind, n).unwrap() {
                if !c.cell.matches() {
                    misses.push((kind, c.adder, c.method, c.topology, n, c.cell.value));
                }
            }
        }
    }
    let expected = [
        (TableKind::Monolithic, 16, 48),
        (TableKind::Monolithic, 128, 384),
        (TableKind::Monolithic, 1024, 3072),
        (TableKind::Decomposed, 16, 45),
        (TableKind::Decomposed, 128, 381),
        (TableKind::Decomposed, 1024, 3069),
    ]
    .map(|(k, n, v)| (k, Cdkm, Teledata, TwoBus, n, v));
    assert_eq!(misses, expected);
}

#[test]
fn published_fallbacks_are_telegate_or_baseline() {
    for kind in [TableKind::Monolithic, TableKind::Decomposed] {
        for n in TABLE_SIZES {
            for c in table_cells(kind, n).unwrap() {
                if c.cell.provenance == Provenance::Published {
                    assert_ne!(c.method, Teledata, "{c:?}");
                    assert!(c.cell.matches());
                }
            }
        }
    }
}

#[test]
fn teledata_never_slower_than_telegate() {
    for n in [4usize, 8, 16, 32, 64, 128, 256, 1024] {
        for adder in DistAdder::ALL {
            for t in TopologyKind::ALL {
                if !adder.supports(t) {
                    continue;
                }
                let d = latency_baseline(adder, t, n, Teledata).unwrap().value;
                let g = latency_baseline(adder, t, n, Telegate).unwrap().value;
                assert!(d <= g, "{adder} {t} {n}: {d} > {g}");
            }
        }
    }
}

#[test]
fn decomposed_never_slower_than_monolithic() {
    for n in [4usize, 8, 16, 32, 128, 512, 1024] {
        for kind in [TableKind::Monolithic] {
            for c in table_cells(kind, n).unwrap() {
                let d = latency_decomposed(c.adder, c.topology, n, c.method).unwrap().value;
                assert!(d <= c.cell.value, "{c:?}: decomposed {d}");
            }
        }
    }
}

#[test]
fn ripple_cells_follow_their_closed_forms() {
    for n in [5usize, 16, 33, 100] {
        let m = n as u64;
        assert_eq!(latency_baseline(Vbe, Bus, n, Telegate).unwrap().value, 7 * (m - 1));
        assert_eq!(latency_baseline(Vbe, Fully, n, Teledata).unwrap().value, 2 * m - 2);
        assert_eq!(latency_baseline(Cdkm, Line, n, Teledata).unwrap().value, 2 * m + 2);
        assert_eq!(latency_baseline(Cdkm, Bus, n, Teledata).unwrap().value, 6 * (m - 1));
        assert_eq!(latency_decomposed(Vbe, TwoBus, n, Telegate).unwrap().value, (7 * (m - 1)).div_ceil(2));
        assert_eq!(latency_decomposed(Cdkm, Fully, n, Teledata).unwrap().value, 12);
        // the line and 2fully columns also agree with the operation count
        assert_eq!(
            latency_baseline(Cdkm, TwoFully, n, Teledata).unwrap().value,
            dist_adder_comm(Cdkm, Teledata, TwoFully, n).unwrap()
        );
    }
}

#[test]
fn lookahead_fully_cells_follow_the_layer_count() {
    for k in 2..=10u64 {
        let n = 1usize << k;
        assert_eq!(latency_baseline(Qcla, Fully, n, Teledata).unwrap().value, 4 * (8 * k - 12) + 16);
        assert_eq!(latency_baseline(Qcla, TwoFully, n, Teledata).unwrap().value, 2 * (8 * k - 12) + 16);
    }
}
