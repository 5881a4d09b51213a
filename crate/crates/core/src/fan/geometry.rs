//! Exact planar lattice geometry: hulls, angular order of directions, conic membership.

use std::cmp::Ordering;

pub type Point = (i64, i64);

pub fn cross(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

pub fn dot(a: Point, b: Point) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

/// Vertices of the convex hull in counterclockwise order starting from the lowest-left
/// point, with collinear points dropped. One point for a point set, two for a segment.
pub fn hull2(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(sub(lower[lower.len() - 1], lower[lower.len() - 2]), sub(p, lower[lower.len() - 2])) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(sub(upper[upper.len() - 1], upper[upper.len() - 2]), sub(p, upper[upper.len() - 2])) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn primitive(v: Point) -> Point {
    let g = gcd(v.0, v.1);
    if g == 0 {
        v
    } else {
        (v.0 / g, v.1 / g)
    }
}

/// Primitive outward edge normals of a hull in counterclockwise order.
pub fn edge_normals(hull: &[Point]) -> Vec<Point> {
    match hull.len() {
        0 | 1 => Vec::new(),
        2 => {
            let d = sub(hull[1], hull[0]);
            let n = primitive((d.1, -d.0));
            vec![n, (-n.0, -n.1)]
        }
        k => (0..k)
            .map(|i| {
                let d = sub(hull[(i + 1) % k], hull[i]);
                primitive((d.1, -d.0))
            })
            .collect(),
    }
}

fn half(v: Point) -> u8 {
    // angles in [0, π) first, then [π, 2π)
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular order starting at the positive x-axis.
pub fn angle_cmp(a: Point, b: Point) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// A direction strictly inside the counterclockwise sector from `cw` to `ccw`.
pub fn sector_interior(cw: Point, ccw: Point) -> Point {
    let c = cross(cw, ccw);
    if c > 0 {
        (cw.0 + ccw.0, cw.1 + ccw.1)
    } else if c < 0 {
        (-cw.0 - ccw.0, -cw.1 - ccw.1)
    } else if dot(cw, ccw) < 0 {
        (-cw.1, cw.0)
    } else {
        // a full turn from a ray back to itself
        (-cw.0, -cw.1)
    }
}

/// Whether `d` lies strictly inside the counterclockwise sector from `cw` to `ccw`.
/// Equal bounding rays mean a full turn.
pub fn strictly_inside(d: Point, cw: Point, ccw: Point) -> bool {
    // rotate so that cw points along the positive x-axis
    let rot = |v: Point| (dot(cw, v), cross(cw, v));
    let along_x = |v: Point| v.1 == 0 && v.0 > 0;
    let (rd, rw) = (rot(d), rot(ccw));
    if along_x(rd) {
        return false;
    }
    along_x(rw) || angle_cmp(rd, rw) == Ordering::Less
}

/// Whether `p` is a nonnegative combination of the given directions.
pub fn in_conic_hull(p: Point, rays: &[Point]) -> bool {
    if p == (0, 0) {
        return true;
    }
    for (i, &r) in rays.iter().enumerate() {
        if cross(r, p) == 0 && dot(r, p) > 0 {
            return true;
        }
        for &s in &rays[i + 1..] {
            let det = cross(r, s);
            if det == 0 {
                continue;
            }
            // p = λ r + μ s
            let lambda = cross(p, s);
            let mu = cross(r, p);
            if (lambda.signum() * det.signum() >= 0) && (mu.signum() * det.signum() >= 0) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_hull_and_normals() {
        let h = hull2(&[(0, 0), (2, 0), (0, 1), (1, 0)]);
        assert_eq!(h, vec![(0, 0), (2, 0), (0, 1)]);
        assert_eq!(edge_normals(&h), vec![(0, -1), (1, 2), (-1, 0)]);
        assert_eq!(hull2(&[(1, 1), (1, 1)]), vec![(1, 1)]);
        assert_eq!(hull2(&[(0, 0), (1, 0), (2, 0)]), vec![(0, 0), (2, 0)]);
    }

    #[test]
    fn angular_order() {
        let mut v = vec![(0, -1), (-1, 0), (1, 2), (1, 0), (1, -1), (-1, -1)];
        v.sort_by(|a, b| angle_cmp(*a, *b));
        assert_eq!(v, vec![(1, 0), (1, 2), (-1, 0), (-1, -1), (0, -1), (1, -1)]);
    }

    #[test]
    fn sectors() {
        assert!(strictly_inside((1, 1), (1, 0), (0, 1)));
        assert!(!strictly_inside((1, 0), (1, 0), (0, 1)));
        assert!(!strictly_inside((0, 1), (1, 0), (0, 1)));
        assert!(strictly_inside((0, 1), (1, 2), (-1, 0)));
        assert!(strictly_inside((1, -5), (0, -1), (1, 2)));
        assert!(strictly_inside((0, 1), (1, 0), (-1, 0)));
        assert!(!strictly_inside((0, -1), (1, 0), (-1, 0)));
        // a full-turn sector holds everything except its ray
        assert!(strictly_inside((0, -1), (1, 0), (1, 0)));
        assert!(!strictly_inside((2, 0), (1, 0), (1, 0)));
        assert_eq!(sector_interior((1, 0), (-1, 0)), (0, 1));
        assert_eq!(sector_interior((0, -1), (1, 2)), (1, 1));
        assert_eq!(sector_interior((1, 2), (0, -1)), (-1, -1));
    }

    #[test]
    fn conic_hull() {
        assert!(in_conic_hull((1, 2), &[(1, 2)]));
        assert!(!in_conic_hull((-1, -2), &[(1, 2)]));
        assert!(in_conic_hull((1, 1), &[(1, 0), (0, 1)]));
        assert!(!in_conic_hull((-1, 1), &[(1, 0), (0, 1)]));
        assert!(in_conic_hull((0, -1), &[(1, 0), (-1, 0), (0, 1), (-1, -1)]));
    }
}
