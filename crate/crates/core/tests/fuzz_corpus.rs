//! Replays the checked-in fuzz seeds through the fuzz targets' assertions.

use std::fs;
use std::path::PathBuf;

use hwp_core::atlas::{parse_atlas_text, AtlasKey};
use hwp_core::format::{parse_factor_line, parse_records, write_records};
use hwp_core::model::CycleProfile;

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn parse_records_seeds() {
    for text in seeds("parse_records") {
        if let Ok(records) = parse_records(&text) {
            assert_eq!(parse_records(&write_records(&records)).unwrap(), records);
        }
    }
}

#[test]
fn parse_factor_line_seeds() {
    for line in seeds("parse_factor_line") {
        if let Ok(f) = parse_factor_line(&line) {
            assert_eq!(parse_factor_line(&f.to_string()), Ok(f));
        }
    }
}

#[test]
fn atlas_text_seeds() {
    let mut parsed = 0;
    for text in seeds("atlas_text") {
        if let Ok(entries) = parse_atlas_text(&text) {
            for e in entries {
                let f = e.factorization.unwrap();
                assert!(f.verify(Some(&e.key.spec().profile())).valid);
                parsed += 1;
            }
        }
    }
    assert!(parsed >= 2);
}

#[test]
fn spec_text_seeds() {
    for text in seeds("spec_text") {
        if let Ok(p) = text.parse::<CycleProfile>() {
            assert_eq!(p.to_string().parse::<CycleProfile>().ok(), Some(p));
        }
        if let Ok(k) = text.parse::<AtlasKey>() {
            assert_eq!(k.to_string().parse::<AtlasKey>().ok(), Some(k));
        }
    }
}
