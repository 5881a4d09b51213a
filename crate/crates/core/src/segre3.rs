//! Coordinate functions of products of three-parameter orbits: their span in `K[a,b,c]`,
//! the exponent picture with in-span and missing monomials, and the 3-D hull of that picture.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::poly::Exps;
use crate::kernel::{det_fraction_free, span_reduce, Characteristic, MultiPoly, Scalar, Var};
use crate::orbit::{apply_family, GroupFamily};
use crate::staircase::{measuring_sequence, Staircase};

pub type Point3 = [i64; 3];

/// The five factors `(x,y³), (x,y⁴), (x²,xy,y⁵), (x,y⁵), (x²,xy,y⁶)` of the worked example.
pub fn example_factors() -> Vec<Staircase> {
    let f = |g: &[(u32, u32)]| Staircase::from_monomials(g).expect("finite colength");
    vec![
        f(&[(1, 0), (0, 3)]),
        f(&[(1, 0), (0, 4)]),
        f(&[(2, 0), (1, 1), (0, 5)]),
        f(&[(1, 0), (0, 5)]),
        f(&[(2, 0), (1, 1), (0, 6)]),
    ]
}

/// Every nonzero maximal minor of the three-parameter spanning matrix of one ideal.
pub fn factor_minors(ideal: &Staircase, ch: Characteristic) -> Result<Vec<MultiPoly>> {
    let m = measuring_sequence(std::slice::from_ref(ideal))?;
    if !m.leq(&GroupFamily::G51.bound()) {
        return Err(Error::UnsupportedMeasuringSequence { a: m.a, b: m.b, family: "g51".into() });
    }
    let p = apply_family(ideal, GroupFamily::G51, ch)?;
    let r = p.rank();
    let subsets = combinations(p.basis.len(), r);
    let minors: Vec<MultiPoly> = subsets
        .par_iter()
        .map(|cols| det_fraction_free(&p.rows.select_columns(cols)).map_err(Error::from))
        .collect::<Result<_>>()?;
    Ok(minors.into_iter().filter(|d| !d.is_zero()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Canonical basis of the span of some polynomials: reduced echelon form with pivots at
/// the lexicographically largest monomials, each basis element made primitive.
pub fn reduce_polys(polys: &[MultiPoly], ch: Characteristic) -> Result<Vec<MultiPoly>> {
    let monos: BTreeSet<Exps> = polys.iter().flat_map(|p| p.terms().map(|(e, _)| *e)).collect();
    let cols: Vec<Exps> = monos.into_iter().rev().collect();
    let index: BTreeMap<Exps, usize> = cols.iter().enumerate().map(|(k, e)| (*e, k)).collect();
    let vectors: Vec<Vec<Scalar>> = polys
        .iter()
        .map(|p| {
            let mut v = vec![Scalar::zero(ch); cols.len()];
            for (e, c) in p.terms() {
                v[index[e]] = c.clone();
            }
            v
        })
        .collect();
    let basis = span_reduce(&vectors)?;
    Ok(basis
        .into_iter()
        .map(|row| {
            let mut p = MultiPoly::from_terms(
                ch,
                row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (cols[k], c)),
            );
            p.make_primitive();
            p
        })
        .collect())
}

/// Basis of the span of all products of one coordinate function per factor.
pub fn coordinate_span(ideals: &[Staircase], ch: Characteristic) -> Result<Vec<MultiPoly>> {
    if ideals.is_empty() {
        return Err(Error::Domain("need at least one ideal".into()));
    }
    let per_factor: Vec<Vec<MultiPoly>> = ideals
        .par_iter()
        .map(|s| reduce_polys(&factor_minors(s, ch)?, ch))
        .collect::<Result<_>>()?;
    let mut span = vec![MultiPoly::one(ch)];
    for factor in &per_factor {
        let products: Vec<MultiPoly> = span
            .par_iter()
            .flat_map(|s| factor.par_iter().map(move |f| s * f))
            .collect();
        span = reduce_polys(&products, ch)?;
    }
    Ok(span)
}

fn exps3(e: &Exps) -> Point3 {
    [
        e[Var::A.index()] as i64,
        e[Var::B.index()] as i64,
        e[Var::C.index()] as i64,
    ]
}

/// Exponent picture of a span of polynomials in `a, b, c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPicture {
    pub points: BTreeSet<Point3>,
    /// Whether the pure monomial at each point lies in the span.
    pub monomial_flags: BTreeMap<Point3, bool>,
    /// Basis of the span modulo its monomials, supported off the in-span monomials.
    pub sporadic: Vec<MultiPoly>,
    pub dim: usize,
}

impl SupportPicture {
    pub fn open_points(&self) -> impl Iterator<Item = Point3> + '_ {
        self.monomial_flags.iter().filter(|(_, &f)| !f).map(|(p, _)| *p)
    }

    pub fn in_span_count(&self) -> usize {
        self.monomial_flags.values().filter(|&&f| f).count()
    }
}

pub fn support_picture(span: &[MultiPoly]) -> Result<SupportPicture> {
    let Some(first) = span.first() else {
        return Err(Error::Domain("empty span".into()));
    };
    let ch = first.characteristic();
    for p in span {
        if [Var::T, Var::X, Var::Y].iter().any(|&v| p.uses(v)) {
            return Err(Error::Domain("span elements must be polynomials in a, b, c".into()));
        }
    }
    let basis = reduce_polys(span, ch)?;
    let dim = basis.len();
    let monos: BTreeSet<Exps> = basis.iter().flat_map(|p| p.terms().map(|(e, _)| *e)).collect();
    let flags: Vec<(Exps, bool)> = monos
        .par_iter()
        .map(|e| -> Result<(Exps, bool)> {
            let mut with = basis.clone();
            with.push(MultiPoly::term(Scalar::one(ch), *e));
            Ok((*e, reduce_polys(&with, ch)?.len() == dim))
        })
        .collect::<Result<_>>()?;
    let in_span: BTreeSet<Exps> = flags.iter().filter(|(_, f)| *f).map(|(e, _)| *e).collect();
    let remainders: Vec<MultiPoly> = basis
        .iter()
        .map(|p| {
            MultiPoly::from_terms(
                ch,
                p.terms().filter(|(e, _)| !in_span.contains(*e)).map(|(e, c)| (*e, c.clone())),
            )
        })
        .filter(|p| !p.is_zero())
        .collect();
    let sporadic = if remainders.is_empty() { Vec::new() } else { reduce_polys(&remainders, ch)? };
    let pic = SupportPicture {
        points: monos.iter().map(exps3).collect(),
        monomial_flags: flags.into_iter().map(|(e, f)| (exps3(&e), f)).collect(),
        sporadic,
        dim,
    };
    if pic.in_span_count() + pic.sporadic.len() != dim {
        return Err(Error::Invariant("span is not monomials plus sporadic generators".into()));
    }
    Ok(pic)
}

/// A maximal planar face of a 3-D hull: `normal · p ≤ offset` on the hull, with equality on
/// the listed points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Point3,
    pub offset: i64,
    pub points: Vec<Point3>,
}

fn sub3(a: Point3, b: Point3) -> Point3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross3(a: Point3, b: Point3) -> Point3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: Point3, b: Point3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn primitive3(v: Point3) -> Point3 {
    use num_integer::Integer;
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g, v[2] / g]
    }
}

/// Dimension of the affine span of a point set.
pub fn affine_dimension(points: &[Point3]) -> usize {
    let Some(&o) = points.first() else { return 0 };
    let mut basis: Vec<Point3> = Vec::new();
    for &p in points {
        let v = sub3(p, o);
        let independent = match basis.len() {
            0 => v != [0, 0, 0],
            1 => cross3(basis[0], v) != [0, 0, 0],
            2 => dot3(cross3(basis[0], basis[1]), v) != 0,
            _ => false,
        };
        if independent {
            basis.push(v);
        }
    }
    basis.len()
}

/// Facets of the convex hull of a full-dimensional lattice point set, each one maximal.
pub fn hull3_faces(points: &[Point3]) -> Result<Vec<Facet>> {
    let pts: Vec<Point3> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let dim = affine_dimension(&pts);
    if dim < 3 {
        return Err(Error::Degenerate(format!("points span an affine subspace of dimension {dim}")));
    }
    let n = pts.len();
    let planes: BTreeSet<(Point3, i64)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let pts = &pts;
            (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))).filter_map(move |(i, j, k)| {
                let nrm = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]));
                if nrm == [0, 0, 0] {
                    return None;
                }
                let d = dot3(nrm, pts[i]);
                let (mut above, mut below) = (false, false);
                for &p in pts {
                    let s = dot3(nrm, p) - d;
                    above |= s > 0;
                    below |= s < 0;
                    if above && below {
                        return None;
                    }
                }
                let nrm = if above { nrm.map(|x| -x) } else { nrm };
                let nrm = primitive3(nrm);
                Some((nrm, dot3(nrm, pts[i])))
            })
        })
        .collect();
    Ok(planes
        .into_iter()
        .map(|(normal, offset)| Facet {
            normal,
            offset,
            points: pts.iter().copied().filter(|&p| dot3(normal, p) == offset).collect(),
        })
        .collect())
}

/// Versioned JSON form of a support picture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PictureJson {
    pub schema_version: u32,
    pub points: Vec<Point3>,
    pub open: Vec<Point3>,
    pub sporadic: Vec<String>,
    #[serde(default)]
    pub facets: usize,
}

impl SupportPicture {
    pub fn to_json(&self, facets: usize) -> PictureJson {
        PictureJson {
            schema_version: crate::fan::json::SCHEMA_VERSION,
            points: self.points.iter().copied().collect(),
            open: self.open_points().collect(),
            sporadic: self.sporadic.iter().map(|p| p.to_string()).collect(),
            facets,
        }
    }

    /// Dot plot: horizontal `a`-exponent, vertical `b`-exponent, radius from the
    /// `c`-exponent, missing monomials hollow.
    pub fn to_svg(&self) -> String {
        use std::fmt::Write;
        let max_a = self.points.iter().map(|p| p[0]).max().unwrap_or(0).max(1) as f64;
        let max_b = self.points.iter().map(|p| p[1]).max().unwrap_or(0).max(1) as f64;
        let (w, h) = (420.0, 420.0);
        let sx = (w - 60.0) / max_a;
        let sy = (h - 60.0) / max_b;
        let mut out = String::new();
        let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">"#);
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        // draw larger c-levels first so small dots stay visible
        let mut pts: Vec<(&Point3, &bool)> = self.monomial_flags.iter().collect();
        pts.sort_by_key(|(p, _)| std::cmp::Reverse(p[2]));
        for (p, &in_span) in pts {
            let x = 30.0 + p[0] as f64 * sx;
            let y = h - 30.0 - p[1] as f64 * sy;
            let r = 2.5 + 2.5 * p[2] as f64;
            let fill = if in_span { "black" } else { "none" };
            let _ = writeln!(
                out,
                r#"<circle cx="{x:.1}" cy="{y:.1}" r="{r:.1}" fill="{fill}" stroke="black"/>"#
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::StepSeq;

    fn q() -> Characteristic {
        Characteristic::ZERO
    }

    fn poly(s: &str) -> MultiPoly {
        MultiPoly::parse(q(), s).unwrap()
    }

    #[test]
    fn small_spans() {
        let m2 = Staircase::max_ideal_power(2);
        assert_eq!(coordinate_span(&[m2], q()).unwrap(), vec![poly("1")]);
        let i3 = Staircase::from_steps(&StepSeq(vec![3]));
        let span = coordinate_span(&[i3], q()).unwrap();
        assert_eq!(span.len(), 2);
        assert!(span.contains(&poly("a")) && span.contains(&poly("1")));
        let pic = support_picture(&span).unwrap();
        assert_eq!(pic.points, [[0, 0, 0], [1, 0, 0]].into_iter().collect());
        assert!(pic.monomial_flags.values().all(|&f| f));
        assert!(pic.sporadic.is_empty());
    }

    #[test]
    fn sporadic_part_of_a_binomial_span() {
        let span = vec![poly("a^2 - b"), poly("c")];
        let pic = support_picture(&span).unwrap();
        assert_eq!(pic.in_span_count(), 1);
        assert_eq!(pic.sporadic, vec![poly("a^2 - b")]);
        assert_eq!(pic.open_points().count(), 2);
    }

    #[test]
    fn oversized_factor_is_rejected() {
        let i6 = Staircase::from_steps(&StepSeq(vec![6]));
        assert!(matches!(coordinate_span(&[i6], q()), Err(Error::UnsupportedMeasuringSequence { .. })));
    }

    #[test]
    fn hull_counts() {
        let tet = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert_eq!(hull3_faces(&tet).unwrap().len(), 4);
        let cube: Vec<Point3> = (0..8).map(|k| [k & 1, (k >> 1) & 1, (k >> 2) & 1]).collect();
        let faces = hull3_faces(&cube).unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.points.len() == 4));
        let mut big: Vec<Point3> = cube.iter().map(|p| p.map(|x| 2 * x)).collect();
        big.push([1, 1, 1]);
        big.push([1, 1, 2]);
        let faces = hull3_faces(&big).unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().any(|f| f.points.contains(&[1, 1, 2])));
        assert!(matches!(hull3_faces(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn combinations_count() {
        assert_eq!(combinations(8, 5).len(), 56);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }
}
