//! The 128-bit design study, recomputed and compared with the printed
//! three-significant-figure values.

use modexp::published::{sig, LATENCY_128, PARAMS_128};
use modexp::{modexp_latency, Algorithm, Arch, ModExpConfig};

fn within(x: f64, want: f64, tol: f64) -> bool {
    if want == 0.0 {
        x == 0.0
    } else {
        ((x - want) / want).abs() <= tol
    }
}

fn report(a: Algorithm, arch: Arch) -> modexp::CostReport {
    modexp_latency(&ModExpConfig::preset(a, 128, arch)).unwrap()
}

#[test]
fn cvbe_and_d_match_to_three_figures() {
    for row in LATENCY_128.iter().filter(|r| matches!(r.algorithm, Algorithm::CVbe | Algorithm::D)) {
        let t = report(row.algorithm, Arch::Ac).latency.times();
        assert_eq!((sig(t.0, 3), sig(t.1, 3), sig(t.2, 3)), row.ac, "{}", row.algorithm);
        assert_eq!(report(row.algorithm, Arch::Ac).perf.round(), row.ac_perf);
    }
    let t = report(Algorithm::CVbe, Arch::Ntc).latency.times();
    assert_eq!((sig(t.1, 3), t.2), (8.32e8, 0.0));
}

#[test]
fn remaining_rows_within_fifteen_percent() {
    for row in &LATENCY_128 {
        let r = report(row.algorithm, Arch::Ac);
        let t = r.latency.times();
        for (x, want) in [(t.0, row.ac.0), (t.1, row.ac.1), (t.2, row.ac.2)] {
            assert!(within(x, want, 0.15), "{} AC {x} vs {want}", row.algorithm);
        }
        assert!(within(r.perf, row.ac_perf, 0.15), "{} perf {}", row.algorithm, r.perf);
        if let Some((cx, nt)) = row.ntc {
            let r = report(row.algorithm, Arch::Ntc);
            assert!(within(r.latency.cnot, cx, 0.15), "{} NTC {} vs {cx}", row.algorithm, r.latency.cnot);
            assert!(within(r.latency.not, nt, 0.15));
            assert!(within(r.perf, row.ntc_perf.unwrap(), 0.15));
        } else {
            assert!(modexp_latency(&ModExpConfig::preset(row.algorithm, 128, Arch::Ntc)).is_err());
        }
    }
}

#[test]
fn e_f_g_on_ac_also_match_to_three_figures() {
    // E, F and G on AC also land on the printed figures
    for a in [Algorithm::E, Algorithm::F, Algorithm::G] {
        let row = LATENCY_128.iter().find(|r| r.algorithm == a).unwrap();
        let t = report(a, Arch::Ac).latency.times();
        assert_eq!((sig(t.0, 3), sig(t.1, 3), sig(t.2, 3)), row.ac, "{a}");
    }
}

#[test]
fn parameters_table() {
    for (a, space, conc) in PARAMS_128 {
        let r = report(a, Arch::Ac);
        assert_eq!(r.space, space, "{a}");
        assert_eq!(r.latency.concurrency as usize, conc, "{a}");
    }
}
