//! The three-parameter example as computed, pinned independently of the stated values.

use std::collections::BTreeSet;

use hilbfan::kernel::{Characteristic, MultiPoly};
use hilbfan::segre3::{coordinate_span, example_factors, hull3_faces, support_picture};

fn primitive(s: &str) -> MultiPoly {
    let mut p = MultiPoly::parse(Characteristic::ZERO, s).unwrap();
    p.make_primitive();
    p
}

#[test]
fn computed_picture() {
    let span = coordinate_span(&example_factors(), Characteristic::ZERO).unwrap();
    let pic = support_picture(&span).unwrap();
    assert_eq!(pic.dim, 132);
    assert_eq!(pic.in_span_count(), 130);

    // each generator is b times one of the two stated polynomials
    let got: BTreeSet<String> = pic.sporadic.iter().map(|p| p.to_string()).collect();
    let want: BTreeSet<String> = [
        "b * a^5*(a*c - b^2)*(a*c - 2*b^2)",
        "b * a^2*b*(a*c - b^2)*(a*c - 2*b^2)",
    ]
    .iter()
    .map(|s| primitive(&s.replace(" * ", "*")).to_string())
    .collect();
    assert_eq!(got, want);

    // hollow dots, projected to the (a,b) plane
    let open: BTreeSet<(i64, i64)> = pic.open_points().map(|p| (p[0], p[1])).collect();
    let expect: BTreeSet<(i64, i64)> = [(7, 1), (4, 2), (6, 3), (3, 4), (5, 5), (2, 6)].into_iter().collect();
    assert_eq!(open, expect);
    let positions: BTreeSet<(i64, i64)> = pic.points.iter().map(|p| (p[0], p[1])).collect();
    assert_eq!(positions.len(), 69);

    let points: Vec<_> = pic.points.iter().copied().collect();
    assert_eq!(hull3_faces(&points).unwrap().len(), 7);
}
