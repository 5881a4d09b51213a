#![no_main]

use hilbfan::fan::json::{diagram_text, DiagramJson};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(j) = serde_json::from_slice::<DiagramJson>(data) else { return };
    let entries = j.entries();
    let _ = diagram_text(&entries);
    let text = serde_json::to_string(&j).unwrap();
    let again: DiagramJson = serde_json::from_str(&text).unwrap();
    assert_eq!(again.entries(), entries);
});
