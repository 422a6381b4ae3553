#![no_main]

use hwp_core::format::parse_factor_line;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_factor_line(line) {
        assert_eq!(parse_factor_line(&f.to_string()), Ok(f));
    }
});
