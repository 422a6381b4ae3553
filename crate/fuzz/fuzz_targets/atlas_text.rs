#![no_main]

use hwp_core::atlas::parse_atlas_text;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(entries) = parse_atlas_text(text) {
        for e in entries {
            let f = e.factorization.expect("parsed entries carry factors");
            assert!(f.verify(Some(&e.key.spec().profile())).valid);
        }
    }
});
