#![no_main]

use hilbfan::verify::golden::MatrixJson;
use hilbfan::verify::perm::permutation_equivalence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(m) = serde_json::from_slice::<MatrixJson>(data) else { return };
    if m.rows.len() > 8 || m.rows.iter().any(|r| r.len() > 8) {
        return;
    }
    // a matrix is always equivalent to itself
    if m.rows.iter().all(|r| r.len() == m.rows.first().map_or(0, Vec::len)) {
        assert!(permutation_equivalence(&m.rows, &m.rows).is_some());
    }
});
