use qecrel::{
    dqec_cycle_epr, logical_zero_epr, logical_zero_epr_cost, Breakpoint, Direction, Method,
};

#[test]
fn breakpoint_table() {
    let expect = [
        (2, 1, Direction::BToA),
        (3, 2, Direction::BToA),
        (4, 3, Direction::BToA),
        (3, 3, Direction::AToB),
        (3, 2, Direction::AToB),
        (2, 1, Direction::AToB),
    ];
    for (bp, (gate, data, dir)) in Breakpoint::ALL.into_iter().zip(expect) {
        let c = logical_zero_epr_cost(bp);
        assert_eq!((c.telegate, c.teledata, c.direction), (gate, data, dir), "{bp}");
        assert!(c.teledata <= c.telegate);
        assert!(c.teledata <= 3);
    }
    assert_eq!(logical_zero_epr(Breakpoint::A, Method::Teledata), logical_zero_epr(Breakpoint::F, Method::Teledata));
    assert_eq!(logical_zero_epr(Breakpoint::A, Method::Telegate), logical_zero_epr(Breakpoint::F, Method::Telegate));
}

#[test]
fn distributed_qec_cycle() {
    let g = dqec_cycle_epr(Method::Telegate);
    assert_eq!((g.per_syndrome, g.total), (17, 204));
    let d = dqec_cycle_epr(Method::Teledata);
    assert_eq!((d.per_syndrome, d.total), (12, 144));
    assert_eq!(d.worst_block, 36);
    assert_eq!(d.block_transfer, 7);
    assert!(d.dominated && g.dominated);
}
