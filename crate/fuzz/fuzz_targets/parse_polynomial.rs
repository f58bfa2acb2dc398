#![no_main]

use libfuzzer_sys::fuzz_target;
use reglab_core::algebra::{parse_polynomial, parse_polynomial_list, RingSpec};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let ring = RingSpec::degrevlex(32003, &["x", "y", "a", "b"]).unwrap();
        if let Ok(p) = parse_polynomial(&ring, s) {
            // rendering must parse back to the same polynomial
            assert_eq!(parse_polynomial(&ring, &p.render()).ok(), Some(p));
        }
        let _ = parse_polynomial_list(&ring, s);
    }
});
