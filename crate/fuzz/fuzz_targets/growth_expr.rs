#![no_main]

use libfuzzer_sys::fuzz_target;
use reglab_core::families::GrowthExpr;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = GrowthExpr::parse(s) {
            // overflow has to surface as an error
            for n in [0, 1, 7, u32::MAX as u64] {
                let _ = g.eval(n);
            }
        }
    }
});
