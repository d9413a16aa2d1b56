#![no_main]
use libfuzzer_sys::fuzz_target;
use rotary::cosetenum::{enumerate_cosets, Presentation};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = s.parse::<Presentation>() {
            // a small table keeps each run cheap; the outcome does not matter
            let _ = enumerate_cosets(&p, 2048);
        }
    }
});
