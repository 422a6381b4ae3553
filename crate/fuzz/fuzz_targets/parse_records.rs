#![no_main]

use hwp_core::format::{parse_records, write_records};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_records(text) {
        let again = parse_records(&write_records(&records)).expect("written records reparse");
        assert_eq!(again, records);
    }
});
