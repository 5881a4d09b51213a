#![no_main]

use hilbfan::fan::json::FanJson;
use hilbfan::fan::Fan2D;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(j) = serde_json::from_slice::<FanJson>(data) else { return };
    if let Ok(f) = Fan2D::try_from(j) {
        let back = FanJson::from(&f);
        let text = serde_json::to_string(&back).unwrap();
        let again: FanJson = serde_json::from_str(&text).unwrap();
        assert_eq!(again, back);
        let _ = hilbfan::fan::svg::fan_svg(&f);
    }
});
