//! Entry points shared by the fuzz targets and the corpus replay test. Each
//! one parses arbitrary bytes and panics only if an invariant breaks.

use std::str::FromStr;

use crate::characters::Partition;
use crate::families::{is_arc, DescentWord, PsiCode};
use crate::perm::Permutation;
use crate::tableaux::StandardTableau;

fn text(data: &[u8]) -> Option<&str> {
    std::str::from_utf8(data).ok()
}

pub fn permutation(data: &[u8]) {
    let Some(s) = text(data) else { return };
    let Ok(p) = Permutation::from_str(s) else { return };
    let back: Permutation = p.to_string().parse().expect("display output parses");
    assert_eq!(back, p);
    assert_eq!(p.inverse().inverse(), p);
    match PsiCode::encode(&p) {
        Ok(code) => {
            assert!(is_arc(&p));
            assert_eq!(code.decode(), p);
            assert_eq!(DescentWord::encode(&p).expect("arc").decode(), p);
        }
        Err(_) => assert!(!is_arc(&p)),
    }
}

pub fn psi_code(data: &[u8]) {
    let Some(s) = text(data) else { return };
    let Ok(code) = PsiCode::from_str(s) else { return };
    let p = code.decode();
    assert!(is_arc(&p));
    assert_eq!(PsiCode::encode(&p).expect("decoded codes are arc"), code);
}

pub fn descent_word(data: &[u8]) {
    let Some(s) = text(data) else { return };
    let Ok(word) = DescentWord::from_str(s) else { return };
    let p = word.decode();
    assert!(is_arc(&p));
    assert_eq!(DescentWord::encode(&p).expect("decoded words are arc"), word);
    let again: DescentWord = word.to_string().parse().expect("display output parses");
    assert_eq!(again, word);
}

pub fn partition(data: &[u8]) {
    let Some(s) = text(data) else { return };
    let Ok(mu) = Partition::from_str(s) else { return };
    assert!(mu.parts().windows(2).all(|w| w[0] >= w[1]));
    assert_eq!(mu.r() + mu.s(), mu.len());
    let back: Partition = mu.to_string().parse().expect("display output parses");
    assert_eq!(back, mu);
}

pub fn tableau(data: &[u8]) {
    let Some(s) = text(data) else { return };
    let Ok(t) = StandardTableau::from_str(s) else { return };
    assert!(t.is_standard());
    assert!(t.transpose().is_standard());
    let back: StandardTableau = t.to_string().parse().expect("display output parses");
    assert_eq!(back, t);
}

/// Target name to entry point, for replaying a corpus directory by name.
pub type Entry = fn(&[u8]);

pub const TARGETS: &[(&str, Entry)] = &[
    ("parse_permutation", permutation),
    ("parse_psi_code", psi_code),
    ("parse_descent_word", descent_word),
    ("parse_partition", partition),
    ("parse_tableau", tableau),
];
