#![no_main]

use libfuzzer_sys::fuzz_target;
use reglab_core::polyhedra::MonoPolyhedron;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = MonoPolyhedron::from_json(s);
    }
});
