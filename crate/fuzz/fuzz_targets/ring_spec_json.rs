#![no_main]

use libfuzzer_sys::fuzz_target;
use reglab_core::algebra::RingSpec;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = RingSpec::from_json(s);
    }
});
