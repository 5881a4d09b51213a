#![no_main]

use hilbfan::cli::spec::{parse_direction, parse_substitution};
use hilbfan::kernel::Characteristic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    for p in [0, 2, 3] {
        let ch = Characteristic::new(p).unwrap();
        if let Ok(sub) = parse_substitution(s, ch) {
            assert!(sub.var < 2);
            assert_eq!(sub.h[sub.var], 0);
        }
    }
    let _ = parse_direction(s);
});
