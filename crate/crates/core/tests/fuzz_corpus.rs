//! Replays the checked-in fuzz seeds and throws random text at each entry
//! point, so the parsers get exercised on stable toolchains too.

use std::fs;
use std::path::PathBuf;

use arcperm::fuzzing::TARGETS;
use proptest::prelude::*;

fn corpus_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus")
}

#[test]
fn every_target_has_seeds_and_they_replay() {
    for (name, entry) in TARGETS {
        let dir = corpus_root().join(name);
        let mut seen = 0;
        for file in fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
            let data = fs::read(file.unwrap().path()).unwrap();
            entry(&data);
            seen += 1;
        }
        assert!(seen > 0, "no seeds for {name}");
    }
}

proptest! {
    #[test]
    fn random_text_never_panics(s in "[0-9 ,/()\\[\\]ADad]{0,40}") {
        for (_, entry) in TARGETS {
            entry(s.as_bytes());
        }
    }

    #[test]
    fn random_bytes_never_panic(data in proptest::collection::vec(any::<u8>(), 0..64)) {
        for (_, entry) in TARGETS {
            entry(&data);
        }
    }
}
