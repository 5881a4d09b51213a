//! Replays the checked-in fuzz corpora through the same decoders as the fuzz targets.

use std::path::Path;

use hilbfan::cli::spec::{parse_direction, parse_ideal, parse_substitution};
use hilbfan::fan::json::{DiagramJson, FanJson};
use hilbfan::fan::Fan2D;
use hilbfan::kernel::{Characteristic, MultiPoly};
use hilbfan::verify::golden::MatrixJson;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<Vec<u8>> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn text(b: &[u8]) -> &str {
    std::str::from_utf8(b).unwrap()
}

#[test]
fn text_parsers() {
    let accepted = seeds("ideal_spec").iter().filter(|s| parse_ideal(text(s)).is_ok()).count();
    assert_eq!(accepted, 5);
    for s in seeds("substitution") {
        let _ = parse_substitution(text(&s), Characteristic::ZERO);
        let _ = parse_direction(text(&s));
    }
    for s in seeds("poly_parse") {
        if let Ok(p) = MultiPoly::parse(Characteristic::ZERO, text(&s)) {
            assert_eq!(MultiPoly::parse(Characteristic::ZERO, &p.to_string()).unwrap(), p);
        }
    }
}

#[test]
fn json_decoders() {
    for s in seeds("fan_json") {
        let j: FanJson = serde_json::from_slice(&s).unwrap();
        let f = Fan2D::try_from(j.clone()).unwrap();
        assert_eq!(FanJson::from(&f), j);
    }
    for s in seeds("diagram_json") {
        let j: DiagramJson = serde_json::from_slice(&s).unwrap();
        assert!(!j.entries().is_empty());
    }
    for s in seeds("golden_matrix") {
        let m: MatrixJson = serde_json::from_slice(&s).unwrap();
        assert!(hilbfan::verify::perm::permutation_equivalence(&m.rows, &m.rows).is_some());
    }
}
