#![no_main]
use libfuzzer_sys::fuzz_target;
use rotary::grp::Word;

// anything that parses must print back to something that parses to the same word
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(w) = s.parse::<Word>() {
            let back: Word = w.to_string().parse().expect("printed word reparses");
            assert_eq!(back, w);
        }
    }
});
