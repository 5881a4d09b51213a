//! Plain SVG output for supports, fans and boundary diagrams.

use std::fmt::Write;

use super::json::diagram_text;
use super::{BoundaryDiagram, DiagramEntry, ExponentSupport, Fan2D, Point};

const SIZE: f64 = 400.0;

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Maps lattice points into the drawing box, y upwards.
struct Frame {
    min: Point,
    scale: f64,
}

impl Frame {
    fn new(points: &[Point]) -> Self {
        let lo = (
            points.iter().map(|p| p.0).min().unwrap_or(0),
            points.iter().map(|p| p.1).min().unwrap_or(0),
        );
        let hi = (
            points.iter().map(|p| p.0).max().unwrap_or(0),
            points.iter().map(|p| p.1).max().unwrap_or(0),
        );
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1) as f64;
        Frame { min: lo, scale: (SIZE - 80.0) / span }
    }

    fn at(&self, p: Point) -> (f64, f64) {
        (
            40.0 + (p.0 - self.min.0) as f64 * self.scale,
            SIZE - 40.0 - (p.1 - self.min.1) as f64 * self.scale,
        )
    }
}

/// Support points with the hull outlined and vertices labelled by their ideals.
pub fn support_svg(s: &ExponentSupport) -> String {
    let pts: Vec<Point> = s.points.iter().copied().collect();
    let frame = Frame::new(&pts);
    let mut out = String::new();
    header(&mut out);
    let hull = s.hull();
    if hull.len() >= 2 {
        let path: Vec<String> = hull
            .iter()
            .map(|&p| {
                let (x, y) = frame.at(p);
                format!("{x:.1},{y:.1}")
            })
            .collect();
        let _ = writeln!(out, r##"<polygon points="{}" fill="#eef" stroke="black"/>"##, path.join(" "));
    }
    for &p in &pts {
        let (x, y) = frame.at(p);
        let _ = writeln!(out, r#"<circle cx="{x:.1}" cy="{y:.1}" r="3" fill="black"/>"#);
        if let Some(m) = s.vertex_map.get(&p) {
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" font-size="11">{}</text>"#,
                x + 5.0,
                y - 5.0,
                escape(&m.to_string())
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Rays from the origin with each cone labelled at its bisector.
pub fn fan_svg(f: &Fan2D) -> String {
    let mut out = String::new();
    header(&mut out);
    let c = SIZE / 2.0;
    let unit = |v: Point, len: f64| {
        let n = ((v.0 * v.0 + v.1 * v.1) as f64).sqrt().max(1e-9);
        (c + len * v.0 as f64 / n, c - len * v.1 as f64 / n)
    };
    for &r in &f.rays {
        let (x, y) = unit(r, c - 30.0);
        let _ = writeln!(out, r#"<line x1="{c}" y1="{c}" x2="{x:.1}" y2="{y:.1}" stroke="black"/>"#);
        let (tx, ty) = unit(r, c - 15.0);
        let _ = writeln!(
            out,
            r#"<text x="{tx:.1}" y="{ty:.1}" font-size="11" text-anchor="middle">({},{})</text>"#,
            r.0, r.1
        );
    }
    for cone in &f.cones {
        let mid = match (cone.ray_cw, cone.ray_ccw) {
            (Some(a), Some(b)) => super::geometry::sector_interior(a, b),
            _ => (1, 1),
        };
        let (x, y) = unit(mid, c / 2.0);
        let label: Vec<String> = cone.ideals.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(
            out,
            r#"<text x="{x:.1}" y="{y:.1}" font-size="10" text-anchor="middle">{}</text>"#,
            escape(&label.join(" "))
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Boundary divisors as vertical segments with the cone ideals between them.
pub fn diagram_svg(d: &BoundaryDiagram) -> String {
    let rows = d.entries.len().max(1) as f64;
    let step = (SIZE - 40.0) / rows;
    let mut out = String::new();
    header(&mut out);
    let _ = writeln!(out, r#"<title>{}</title>"#, escape(&diagram_text(&d.entries)));
    for (k, e) in d.entries.iter().enumerate() {
        let y = 20.0 + step * (k as f64 + 0.5);
        match e {
            DiagramEntry::Ray(r) => {
                let _ = writeln!(
                    out,
                    r#"<line x1="{0}" y1="{1:.1}" x2="{0}" y2="{2:.1}" stroke="black" stroke-width="2"/>"#,
                    SIZE / 2.0,
                    y - step / 2.0,
                    y + step / 2.0
                );
                let _ = writeln!(
                    out,
                    r#"<text x="{:.1}" y="{y:.1}" font-size="11">({},{})</text>"#,
                    SIZE / 2.0 + 8.0,
                    r.0,
                    r.1
                );
            }
            DiagramEntry::Ideal(s) => {
                let st = s.to_steps();
                let txt: Vec<String> = st.0.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    r#"<text x="{:.1}" y="{y:.1}" font-size="11" text-anchor="end">{}</text>"#,
                    SIZE / 2.0 - 8.0,
                    txt.join(",")
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{boundary_diagram, exponent_support_probe, standard_fan};
    use crate::kernel::Characteristic;
    use crate::orbit::{apply_family, GroupFamily};
    use crate::staircase::{Staircase, StepSeq};

    #[test]
    fn outputs_are_well_formed() {
        let i = Staircase::from_steps(&StepSeq(vec![4]));
        let f = standard_fan(&[i.clone()], None, Characteristic::ZERO).unwrap();
        let p = apply_family(&i, GroupFamily::G41, Characteristic::ZERO).unwrap();
        for s in [
            fan_svg(&f),
            diagram_svg(&boundary_diagram(&f).unwrap()),
            support_svg(&exponent_support_probe(&p).unwrap()),
        ] {
            assert!(s.starts_with("<svg"));
            assert!(s.trim_end().ends_with("</svg>"));
            assert_eq!(s.matches("<text").count(), s.matches("</text>").count());
        }
    }
}
