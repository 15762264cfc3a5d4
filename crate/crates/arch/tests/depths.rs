//! Scheduled depths of the generated adders and the NTC template.

use adders::{generate, AdderKind};
use arch::{
    count_gates, critical_path, lower, schedule, schedule_capped, vbe_ntc_template, ArchModel,
    ScheduledCircuit,
};
use revsim::{assert_equiv, Circuit};

fn sane(c: &Circuit, s: &ScheduledCircuit) {
    s.check_disjoint().unwrap();
    let d = s.depth().times();
    let seq = count_gates(c).times();
    assert!(d.0 <= seq.0 && d.1 <= seq.1 && d.2 <= seq.2);
    assert_eq!(d, critical_path(c).times());
}

#[test]
fn vbe_on_ac() {
    for n in 3..=16usize {
        let a = generate(AdderKind::Vbe, n).unwrap();
        let s = schedule(&a.circuit, &ArchModel::Ac).unwrap();
        sane(&a.circuit, &s);
        let n = n as f64;
        assert_eq!(s.depth().times(), (3.0 * n - 3.0, 2.0 * n - 1.0, 0.0));
        assert_eq!(s.concurrency(), 3);
    }
}

#[test]
fn cdkm_on_ac() {
    for n in [4usize, 5, 8, 16, 32] {
        let a = generate(AdderKind::Cdkm, n).unwrap();
        let s = schedule(&a.circuit, &ArchModel::Ac).unwrap();
        sane(&a.circuit, &s);
        assert_eq!(s.depth().times(), ((2 * n - 1) as f64, 5.0, 0.0));
    }
}

#[test]
fn qcla_on_ac() {
    assert_eq!(
        schedule(&generate(AdderKind::Qcla, 4).unwrap().circuit, &ArchModel::Ac).unwrap().depth().times(),
        (9.0, 4.0, 2.0)
    );
    for k in 3..=6u32 {
        let a = generate(AdderKind::Qcla, 1 << k).unwrap();
        let s = schedule(&a.circuit, &ArchModel::Ac).unwrap();
        sane(&a.circuit, &s);
        assert_eq!(s.depth().times(), ((4 * k + 3) as f64, 4.0, 2.0));
    }
}

#[test]
fn ntc_template_depths() {
    for n in 3..=8usize {
        let t = vbe_ntc_template(n).unwrap();
        let arch = ArchModel::ntc_identity(3 * n + 1);
        let s = schedule(&t.circuit, &arch).unwrap();
        sane(&t.circuit, &s);
        assert_eq!(s.depth().times(), (0.0, (20 * n - 21) as f64, 0.0));
        assert_eq!(s.depth().space, (3 * n + 1) as f64);

        let two = schedule_capped(&t.circuit, 2).unwrap();
        two.check_disjoint().unwrap();
        assert_eq!(two.concurrency(), 2);
        assert_eq!(two.depth().times(), (0.0, (21 * n - 23) as f64, 0.0));
    }
}

#[test]
fn ntc_template_matches_macro_form() {
    for n in 1..=3 {
        let t = vbe_ntc_template(n).unwrap();
        assert!(assert_equiv(&t.circuit, &t.macro_circuit).unwrap());
    }
}

#[test]
fn capped_never_beats_uncapped() {
    for n in [3usize, 6, 9] {
        let a = generate(AdderKind::Vbe, n).unwrap();
        let free = schedule(&a.circuit, &ArchModel::Ac).unwrap().depth().times();
        for cap in 1..=3 {
            let s = schedule_capped(&a.circuit, cap).unwrap();
            assert!(s.concurrency() <= cap);
            assert!(s.depth().times() >= free);
        }
    }
}

#[test]
fn lowered_adders_stay_equivalent() {
    for kind in [AdderKind::Vbe, AdderKind::Cdkm] {
        let a = generate(kind, 3).unwrap();
        let w = a.circuit.width();
        // reversed line, so almost every gate needs routing
        let arch = ArchModel::ntc((0..w).rev().collect()).unwrap();
        let l = lower(&a.circuit, &arch).unwrap();
        arch::check_legal(&l.circuit, &arch).unwrap();
        assert_eq!(count_gates(&l.circuit).ccnot, 0.0);
        assert!(assert_equiv(&a.circuit, &l.circuit).unwrap());
        let s = schedule(&l.circuit, &arch).unwrap();
        s.check_disjoint().unwrap();
    }
}
