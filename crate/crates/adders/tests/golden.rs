//! Circuit dumps for small widths are pinned byte for byte. Set
//! `UPDATE_GOLDEN=1` to rewrite them after an intentional change.

use std::path::PathBuf;

use adders::{generate, AdderKind};

fn check(kind: AdderKind, n: usize) {
    let text = generate(kind, n).unwrap().circuit.to_text();
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{}_{n}.txt", kind.name().to_lowercase()));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, want, "{} differs", path.display());
    // and the dump reads back to the same circuit
    let back = revsim::Circuit::from_text(&want).unwrap();
    assert_eq!(back.to_text(), want);
}

#[test]
fn golden_dumps() {
    for n in 2..=4 {
        for kind in AdderKind::ALL {
            match (kind, n) {
                (AdderKind::Qcla, 3) | (AdderKind::Csum, 2) => continue,
                _ => check(kind, n),
            }
        }
    }
}
