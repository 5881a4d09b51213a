#![no_main]

use hilbfan::cli::spec::parse_ideal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(ideal) = parse_ideal(s) {
        // anything accepted prints back to an equal ideal
        let again = parse_ideal(&ideal.to_string()).expect("printed form parses");
        assert_eq!(again, ideal);
        assert!(ideal.colength() > 0);
    }
});
