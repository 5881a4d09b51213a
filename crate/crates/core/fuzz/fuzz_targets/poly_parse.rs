#![no_main]

use hilbfan::kernel::{Characteristic, MultiPoly};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 256 {
        return;
    }
    for p in [0, 5] {
        let ch = Characteristic::new(p).unwrap();
        if let Ok(f) = MultiPoly::parse(ch, s) {
            let again = MultiPoly::parse(ch, &f.to_string()).expect("display output parses");
            assert_eq!(again, f);
        }
    }
});
