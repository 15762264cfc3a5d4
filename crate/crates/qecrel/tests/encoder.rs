use qecrel::{steane_codewords, steane_zero_encoder};
use revsim::{run_statevector, BasisState};

const CODEWORDS: [&str; 8] = [
    "0000000", "1101001", "1011010", "0110011", "0111100", "1010101", "1100110", "0001111",
];

#[test]
fn encoder_prepares_equal_superposition_of_codewords() {
    let c = steane_zero_encoder();
    let out = run_statevector(&c, &BasisState::from_u64(7, 0)).unwrap();
    let support = out.support(1e-12);
    assert_eq!(support.len(), 8);
    let amp = 1.0 / 8f64.sqrt();
    for w in CODEWORDS {
        let idx = u64::from_str_radix(w, 2).unwrap();
        let a = support.get(&idx).unwrap_or_else(|| panic!("{w} missing"));
        assert!((a.re - amp).abs() < 1e-12 && a.im.abs() < 1e-12, "{w}: {a}");
    }
}

#[test]
fn codeword_list_is_the_even_code() {
    assert_eq!(steane_codewords(), CODEWORDS);
    // every nonzero codeword has weight 4: distance 3 for the full code
    for w in &CODEWORDS[1..] {
        assert_eq!(w.chars().filter(|&c| c == '1').count(), 4);
    }
}
