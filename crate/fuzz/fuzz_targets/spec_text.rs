#![no_main]

use hwp_core::atlas::AtlasKey;
use hwp_core::model::CycleProfile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<CycleProfile>() {
        assert_eq!(p.to_string().parse::<CycleProfile>().ok(), Some(p));
    }
    if let Ok(k) = text.parse::<AtlasKey>() {
        assert_eq!(k.to_string().parse::<AtlasKey>().ok(), Some(k));
    }
});
