#![no_main]
use libfuzzer_sys::fuzz_target;
use rotary::oracle::RotationSystem;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(rs) = s.parse::<RotationSystem>() {
            let back: RotationSystem = rs.to_text().parse().expect("exported text reparses");
            assert_eq!(back, rs);
        }
    }
});
