//! Standard fans of orbit closures: exponent supports of the Plücker coordinates, their
//! hulls and normal fans, the cone ideals on either side of a ray, and the checks that
//! relate neighbouring cones.

pub mod geometry;
pub mod json;
pub mod svg;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{det_scalar, Characteristic};
use crate::limits::{probe, rot_ccw, rot_cw};
use crate::orbit::{apply_family, choose_family, GroupFamily, ParamIdeal};
use crate::staircase::{enumerate_between, measuring_sequence, Staircase};

pub use geometry::{hull2, primitive, Point};
use geometry::{angle_cmp, dot, edge_normals, in_conic_hull, sector_interior, strictly_inside};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportMethod {
    Enumeration,
    Probing,
}

/// Lattice points `(e_a, e_b)` of the nonzero coordinates `a^{e_a} b^{e_b}` of one orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSupport {
    pub points: BTreeSet<Point>,
    /// The monomial ideal sitting at each hull vertex.
    pub vertex_map: BTreeMap<Point, Staircase>,
    pub method: SupportMethod,
}

impl ExponentSupport {
    pub fn hull(&self) -> Vec<Point> {
        hull2(&self.points.iter().copied().collect::<Vec<_>>())
    }

    /// The hull vertex maximising `⟨u, ·⟩`, which must be unique.
    fn argmax(&self, u: Point) -> Result<(Point, &Staircase)> {
        let best = self.vertex_map.keys().map(|&v| dot(u, v)).max().ok_or_else(|| {
            Error::Invariant("support without vertices".into())
        })?;
        let mut hits = self.vertex_map.iter().filter(|(v, _)| dot(u, **v) == best);
        let (v, s) = hits.next().expect("the maximum is attained");
        if hits.next().is_some() {
            return Err(Error::Invariant(format!("direction ({},{}) is not generic", u.0, u.1)));
        }
        Ok((*v, s))
    }

    fn check_vertices(&self) -> Result<()> {
        for v in self.hull() {
            if !self.vertex_map.contains_key(&v) {
                return Err(Error::Invariant(format!("hull vertex ({},{}) has no monomial ideal", v.0, v.1)));
            }
        }
        Ok(())
    }
}

/// Support from every monomial ideal in the sandwich whose minor is nonzero.
///
/// Each such minor is a scalar times a parameter monomial, so its scalar is read off at
/// `a = b = 1` in any characteristic.
pub fn exponent_support_enumerate(p: &ParamIdeal) -> Result<ExponentSupport> {
    let candidates = enumerate_between(&p.sandwich_low, &p.sandwich_high, p.source.colength());
    let found: Vec<(Point, Staircase)> = candidates
        .into_par_iter()
        .map(|m| -> Result<Option<(Point, Staircase)>> {
            let cols = p.columns_of(&m)?;
            let sub: Vec<Vec<_>> = p
                .numeric_rows()
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                .collect();
            if det_scalar(&sub, p.ch)?.is_zero() {
                return Ok(None);
            }
            let point = p.exponent_of(&m)?;
            Ok(Some((point, m)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let points: BTreeSet<Point> = found.iter().map(|(pt, _)| *pt).collect();
    let hull: BTreeSet<Point> = hull2(&points.iter().copied().collect::<Vec<_>>()).into_iter().collect();
    let mut vertex_map = BTreeMap::new();
    for (pt, m) in found {
        if hull.contains(&pt) {
            if let Some(prev) = vertex_map.insert(pt, m.clone()) {
                return Err(Error::Invariant(format!(
                    "hull vertex ({},{}) carries both {prev} and {m}",
                    pt.0, pt.1
                )));
            }
        }
    }
    let out = ExponentSupport {
        points,
        vertex_map,
        method: SupportMethod::Enumeration,
    };
    out.check_vertices()?;
    Ok(out)
}

/// Hull vertices found by monomial limits along generic directions, refining the hull
/// through its edge normals until nothing new appears.
pub fn exponent_support_probe(p: &ParamIdeal) -> Result<ExponentSupport> {
    let mut vertex_map: BTreeMap<Point, Staircase> = BTreeMap::new();
    let record = |vm: &mut BTreeMap<Point, Staircase>, found: Vec<Staircase>| -> Result<bool> {
        let mut grew = false;
        for m in found {
            let pt = p.exponent_of(&m)?;
            match vm.get(&pt) {
                Some(prev) if prev != &m => {
                    return Err(Error::Invariant(format!("probes put {prev} and {m} at one point")));
                }
                Some(_) => {}
                None => {
                    vm.insert(pt, m);
                    grew = true;
                }
            }
        }
        Ok(grew)
    };
    let probes_around = |dirs: &[Point]| -> Result<Vec<Staircase>> {
        dirs.par_iter()
            .flat_map(|&u| [(u, rot_cw(u)), (u, rot_ccw(u))])
            .map(|(u, r)| probe(p, u, r))
            .collect()
    };
    let axes = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    record(&mut vertex_map, probes_around(&axes)?)?;
    let mut probed: BTreeSet<Point> = axes.into_iter().collect();
    loop {
        let hull = hull2(&vertex_map.keys().copied().collect::<Vec<_>>());
        let fresh: Vec<Point> = edge_normals(&hull).into_iter().filter(|n| !probed.contains(n)).collect();
        if fresh.is_empty() {
            break;
        }
        probed.extend(fresh.iter().copied());
        record(&mut vertex_map, probes_around(&fresh)?)?;
    }
    // keep only hull vertices; edge points found by tie-breaks are not needed
    let hull: BTreeSet<Point> = hull2(&vertex_map.keys().copied().collect::<Vec<_>>()).into_iter().collect();
    vertex_map.retain(|pt, _| hull.contains(pt));
    Ok(ExponentSupport {
        points: vertex_map.keys().copied().collect(),
        vertex_map,
        method: SupportMethod::Probing,
    })
}

/// One maximal cone, between `ray_cw` and `ray_ccw` counterclockwise. A fan with no rays has
/// a single cone, the whole plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub ray_cw: Option<Point>,
    pub ray_ccw: Option<Point>,
    pub vertex: Point,
    /// One ideal per factor.
    pub ideals: Vec<Staircase>,
}

impl Cone {
    pub fn contains_strictly(&self, d: Point) -> bool {
        match (self.ray_cw, self.ray_ccw) {
            (Some(a), Some(b)) => strictly_inside(d, a, b),
            _ => true,
        }
    }

    /// The ideal of a single-factor fan.
    pub fn ideal(&self) -> &Staircase {
        &self.ideals[0]
    }
}

/// A complete fan in the plane with rays in counterclockwise order; cone `i` lies between
/// `rays[i]` and `rays[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan2D {
    pub family: GroupFamily,
    pub ch: Characteristic,
    pub sources: Vec<Staircase>,
    pub rays: Vec<Point>,
    pub cones: Vec<Cone>,
}

/// Standard fan of a list of ideals, with probed supports.
pub fn standard_fan(ideals: &[Staircase], family: Option<GroupFamily>, ch: Characteristic) -> Result<Fan2D> {
    standard_fan_with(ideals, family, ch, SupportMethod::Probing)
}

pub fn standard_fan_with(
    ideals: &[Staircase],
    family: Option<GroupFamily>,
    ch: Characteristic,
    method: SupportMethod,
) -> Result<Fan2D> {
    let family = resolve_family(ideals, family)?;
    let supports: Vec<ExponentSupport> = ideals
        .par_iter()
        .map(|s| {
            let p = apply_family(s, family, ch)?;
            match method {
                SupportMethod::Enumeration => exponent_support_enumerate(&p),
                SupportMethod::Probing => exponent_support_probe(&p),
            }
        })
        .collect::<Result<_>>()?;
    fan_from_supports(ideals, family, ch, &supports)
}

fn resolve_family(ideals: &[Staircase], family: Option<GroupFamily>) -> Result<GroupFamily> {
    let auto = choose_family(ideals);
    let family = match family {
        None => auto?,
        Some(f) => {
            let m = measuring_sequence(ideals)?;
            if !m.leq(&f.bound()) {
                return Err(Error::UnsupportedMeasuringSequence { a: m.a, b: m.b, family: f.to_string() });
            }
            f
        }
    };
    if family == GroupFamily::G51 {
        let m = measuring_sequence(ideals)?;
        return Err(Error::UnsupportedMeasuringSequence {
            a: m.a,
            b: m.b,
            family: "g41/g32 (three-parameter supports are handled by segre3)".into(),
        });
    }
    Ok(family)
}

/// The common refinement of the factors' normal fans; its cone vertices are the sums of the
/// factors' vertices, i.e. the normal fan of the Minkowski sum of the supports.
pub fn fan_from_supports(
    sources: &[Staircase],
    family: GroupFamily,
    ch: Characteristic,
    supports: &[ExponentSupport],
) -> Result<Fan2D> {
    if supports.is_empty() || supports.len() != sources.len() {
        return Err(Error::Domain("need one support per ideal".into()));
    }
    let mut rays: Vec<Point> = supports
        .iter()
        .flat_map(|s| edge_normals(&s.hull()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    rays.sort_by(|a, b| angle_cmp(*a, *b));
    let label = |d: Point| -> Result<(Point, Vec<Staircase>)> {
        let mut vertex = (0, 0);
        let mut ideals = Vec::new();
        for s in supports {
            let (v, m) = s.argmax(d)?;
            vertex = (vertex.0 + v.0, vertex.1 + v.1);
            ideals.push(m.clone());
        }
        Ok((vertex, ideals))
    };
    let cones = if rays.is_empty() {
        let (vertex, ideals) = label((0, 0))?;
        vec![Cone { ray_cw: None, ray_ccw: None, vertex, ideals }]
    } else {
        (0..rays.len())
            .map(|i| {
                let (a, b) = (rays[i], rays[(i + 1) % rays.len()]);
                let (vertex, ideals) = label(sector_interior(a, b))?;
                Ok(Cone { ray_cw: Some(a), ray_ccw: Some(b), vertex, ideals })
            })
            .collect::<Result<_>>()?
    };
    let fan = Fan2D { family, ch, sources: sources.to_vec(), rays, cones };
    fan.validate()?;
    Ok(fan)
}

impl Fan2D {
    fn validate(&self) -> Result<()> {
        let colengths: Vec<u64> = self.sources.iter().map(|s| s.colength()).collect();
        for c in &self.cones {
            let got: Vec<u64> = c.ideals.iter().map(|s| s.colength()).collect();
            if got != colengths {
                return Err(Error::Invariant("cone ideal of the wrong colength".into()));
            }
        }
        let labels: BTreeSet<&Vec<Staircase>> = self.cones.iter().map(|c| &c.ideals).collect();
        if labels.len() != self.cones.len() {
            return Err(Error::Invariant("two cones share a label".into()));
        }
        Ok(())
    }

    pub fn is_single(&self) -> bool {
        self.sources.len() == 1
    }

    /// Cones just clockwise and just counterclockwise of the ray through `d`; the same cone
    /// twice when `d` is interior.
    pub fn adjacent(&self, d: Point) -> Result<(&Cone, &Cone)> {
        if d == (0, 0) {
            return Err(Error::Domain("direction must be nonzero".into()));
        }
        let k = self.rays.len();
        let d = primitive(d);
        if let Some(i) = self.rays.iter().position(|&r| r == d) {
            return Ok((&self.cones[(i + k - 1) % k], &self.cones[i]));
        }
        let c = self
            .cones
            .iter()
            .find(|c| c.contains_strictly(d))
            .ok_or_else(|| Error::Invariant("fan does not cover the plane".into()))?;
        Ok((c, c))
    }

    /// `(I⁺, I⁻)` at `d` for a single-ideal fan.
    pub fn adjacent_ideals(&self, d: Point) -> Result<(Staircase, Staircase)> {
        if !self.is_single() {
            return Err(Error::Precondition("adjacent_ideals needs a single-ideal fan".into()));
        }
        let (p, m) = self.adjacent(d)?;
        Ok((p.ideal().clone(), m.ideal().clone()))
    }

    pub fn cone_of(&self, ideal: &Staircase) -> Option<&Cone> {
        self.cones.iter().find(|c| c.ideals.len() == 1 && &c.ideals[0] == ideal)
    }

    /// Pairs of cones meeting along each ray: `(ray, clockwise cone, counterclockwise cone)`.
    pub fn walls(&self) -> impl Iterator<Item = (Point, &Cone, &Cone)> + '_ {
        let k = self.rays.len();
        (0..k).map(move |i| (self.rays[i], &self.cones[(i + k - 1) % k], &self.cones[i]))
    }

    /// The cone ideals on both sides of every ray have the same graded dimensions under the
    /// ray's weights. Returns the first ray where they differ.
    pub fn graded_mismatch(&self) -> Result<Option<Point>> {
        for (r, cw, ccw) in self.walls() {
            let (wx, wy) = self.family.ray_weights(r)?;
            for (a, b) in cw.ideals.iter().zip(&ccw.ideals) {
                if a.graded_dims(wx, wy) != b.graded_dims(wx, wy) {
                    return Ok(Some(r));
                }
            }
        }
        Ok(None)
    }

    /// Toric self-intersection `D² = -k` of each ray `v`, where `u + w = k v` for its
    /// neighbours `u`, `w`.
    pub fn self_intersections(&self) -> Result<BTreeMap<Point, i64>> {
        let k = self.rays.len();
        if k < 3 {
            return Err(Error::Precondition("self-intersections need at least three rays".into()));
        }
        for i in 0..k {
            let (v, w) = (self.rays[i], self.rays[(i + 1) % k]);
            if geometry::cross(v, w) != 1 {
                return Err(Error::NotSmooth { ray: v, left: self.rays[(i + k - 1) % k], right: w });
            }
        }
        let mut out = BTreeMap::new();
        for i in 0..k {
            let (u, v, w) = (self.rays[(i + k - 1) % k], self.rays[i], self.rays[(i + 1) % k]);
            let s = (u.0 + w.0, u.1 + w.1);
            // smoothness makes s parallel to v
            let kk = if v.0 != 0 { s.0 / v.0 } else { s.1 / v.1 };
            out.insert(v, -kk);
        }
        Ok(out)
    }

    pub fn is_smooth(&self) -> bool {
        let k = self.rays.len();
        k >= 3 && (0..k).all(|i| geometry::cross(self.rays[i], self.rays[(i + 1) % k]) == 1)
    }
}

pub fn adjacent(f: &Fan2D, d: Point) -> Result<(Staircase, Staircase)> {
    f.adjacent_ideals(d)
}

pub fn self_intersections(f: &Fan2D) -> Result<BTreeMap<Point, i64>> {
    f.self_intersections()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramEntry {
    Ray(Point),
    Ideal(Staircase),
}

/// Boundary divisors and their intersection points from the `(0,1)` side down to `(1,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryDiagram {
    pub entries: Vec<DiagramEntry>,
    /// The cone counterclockwise of `(0,1)` when `(0,1)` is itself a ray; it is not part of
    /// the drawn diagram.
    pub above: Option<Staircase>,
}

pub fn boundary_diagram(f: &Fan2D) -> Result<BoundaryDiagram> {
    if !f.is_single() {
        return Err(Error::Precondition("boundary diagrams are drawn for single ideals".into()));
    }
    let k = f.rays.len();
    let end = f
        .rays
        .iter()
        .position(|&r| r == (1, 2))
        .ok_or_else(|| Error::Precondition("(1,2) is not a ray of the fan".into()))?;
    let mut entries = Vec::new();
    let (mut cone, above) = match f.rays.iter().position(|&r| r == (0, 1)) {
        Some(i) => {
            entries.push(DiagramEntry::Ray((0, 1)));
            ((i + k - 1) % k, Some(f.cones[i].ideal().clone()))
        }
        None => {
            let c = f.cones.iter().position(|c| c.contains_strictly((0, 1))).expect("complete fan");
            (c, None)
        }
    };
    loop {
        entries.push(DiagramEntry::Ideal(f.cones[cone].ideal().clone()));
        entries.push(DiagramEntry::Ray(f.rays[cone]));
        if cone == end {
            break;
        }
        cone = (cone + k - 1) % k;
    }
    Ok(BoundaryDiagram { entries, above })
}

/// Outcome of the median test for two cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedianOutcome {
    pub holds: bool,
    pub c: i64,
    pub d: i64,
    /// The point built from `c` and `d`.
    pub point: Point,
    /// `1` if the point itself lies in the cone, `-1` if only its negative does, `0` if neither.
    pub sign: i8,
}

/// With `x^c / y^d` the ratio of the complement products of `i1` and `i2` (swapped so that
/// `c > 0`), tests whether the line through the family's point meets the convex cone
/// spanned by the two labelled cones.
pub fn median_check(f: &Fan2D, i1: &Staircase, i2: &Staircase) -> Result<MedianOutcome> {
    let c1 = f.cone_of(i1).ok_or_else(|| Error::Precondition(format!("{i1} labels no cone")))?;
    let c2 = f.cone_of(i2).ok_or_else(|| Error::Precondition(format!("{i2} labels no cone")))?;
    let (p1, p2) = (i1.complement_product(), i2.complement_product());
    let mut c = p1.0 as i64 - p2.0 as i64;
    let mut d = p2.1 as i64 - p1.1 as i64;
    if c < 0 {
        c = -c;
        d = -d;
    }
    if c == 0 {
        return Err(Error::Precondition("complement products give c = 0".into()));
    }
    let point = match f.family {
        GroupFamily::G41 => (2 * c - d, 3 * c - d),
        GroupFamily::G32 => (2 * c - d, d - c),
        GroupFamily::G51 => return Err(Error::Precondition("no median rule for g51".into())),
    };
    let rays: Vec<Point> = [c1, c2].iter().flat_map(|c| c.ray_cw.into_iter().chain(c.ray_ccw)).collect();
    let inside = |p: Point| rays.is_empty() || in_conic_hull(p, &rays);
    let sign = if inside(point) {
        1
    } else if inside((-point.0, -point.1)) {
        -1
    } else {
        0
    };
    Ok(MedianOutcome { holds: sign != 0, c, d, point, sign })
}

/// Median test for every pair of cones meeting along a ray; returns the failures.
pub fn median_failures(f: &Fan2D) -> Result<Vec<(Point, MedianOutcome)>> {
    let mut bad = Vec::new();
    for (r, cw, ccw) in f.walls() {
        let out = median_check(f, cw.ideal(), ccw.ideal())?;
        if !out.holds {
            bad.push((r, out));
        }
    }
    Ok(bad)
}

/// Primitive integer directions with both coordinates at most `bound` in absolute value.
pub fn primitive_directions(bound: i64) -> Vec<Point> {
    let mut out: Vec<Point> = (-bound..=bound)
        .flat_map(|m| (-bound..=bound).map(move |n| (m, n)))
        .filter(|&v| v != (0, 0) && primitive(v) == v)
        .collect();
    out.sort_by(|a, b| angle_cmp(*a, *b));
    out
}

/// For each direction and each generic side of it, the product of the limits of `i1` and
/// `i2` lies inside the limit of `i1 i2`. Returns the first failing `(direction, side)`.
pub fn multiplicativity_failure(
    i1: &Staircase,
    i2: &Staircase,
    directions: &[Point],
    ch: Characteristic,
) -> Result<Option<(Point, Point)>> {
    let family = choose_family(&[i1.clone(), i2.clone()])?;
    let p1 = apply_family(i1, family, ch)?;
    let p2 = apply_family(i2, family, ch)?;
    let p12 = apply_family(&i1.multiply(i2), family, ch)?;
    let checks: Vec<Option<(Point, Point)>> = directions
        .par_iter()
        .flat_map(|&u| [(u, rot_cw(u)), (u, rot_ccw(u))])
        .map(|(u, r)| -> Result<Option<(Point, Point)>> {
            let lhs = probe(&p1, u, r)?.multiply(&probe(&p2, u, r)?);
            Ok((!lhs.leq(&probe(&p12, u, r)?)).then_some((u, r)))
        })
        .collect::<Result<_>>()?;
    Ok(checks.into_iter().flatten().next())
}

pub fn multiplicativity_check(i1: &Staircase, i2: &Staircase, directions: &[Point], ch: Characteristic) -> Result<bool> {
    Ok(multiplicativity_failure(i1, i2, directions, ch)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::StepSeq;

    fn steps(s: &[u32]) -> Staircase {
        Staircase::from_steps(&StepSeq(s.to_vec()))
    }

    fn q() -> Characteristic {
        Characteristic::ZERO
    }

    fn x2y2() -> Staircase {
        Staircase::new(vec![2, 2]).unwrap()
    }

    #[test]
    fn support_of_x_y4_both_ways() {
        let p = apply_family(&steps(&[4]), GroupFamily::G41, q()).unwrap();
        let e = exponent_support_enumerate(&p).unwrap();
        let pr = exponent_support_probe(&p).unwrap();
        let expect: BTreeMap<Point, Staircase> =
            [((0, 0), steps(&[4])), ((2, 0), x2y2()), ((0, 1), steps(&[1, 2]))].into_iter().collect();
        assert_eq!(e.vertex_map, expect);
        assert_eq!(pr.vertex_map, expect);
        assert!(e.points.is_superset(&pr.points));
    }

    #[test]
    fn degenerate_supports() {
        let m2 = apply_family(&Staircase::max_ideal_power(2), GroupFamily::G41, q()).unwrap();
        let s = exponent_support_enumerate(&m2).unwrap();
        assert_eq!(s.points, [(0, 0)].into_iter().collect());
        assert_eq!(exponent_support_probe(&m2).unwrap().points, s.points);
        let p3 = apply_family(&steps(&[3]), GroupFamily::G41, q()).unwrap();
        let s3 = exponent_support_enumerate(&p3).unwrap();
        assert_eq!(s3.points, [(0, 0), (1, 0)].into_iter().collect());
        assert_eq!(exponent_support_probe(&p3).unwrap().points, s3.points);
    }

    #[test]
    fn fan_of_x_y4() {
        let f = standard_fan(&[steps(&[4])], None, q()).unwrap();
        assert_eq!(f.rays, vec![(1, 2), (-1, 0), (0, -1)]);
        assert_eq!(f.cones[0].ideal(), &steps(&[1, 2]));
        assert_eq!(f.cones[1].ideal(), &steps(&[4]));
        assert_eq!(f.cones[2].ideal(), &x2y2());
        assert_eq!(f.adjacent_ideals((1, 2)).unwrap(), (x2y2(), steps(&[1, 2])));
        assert_eq!(f.adjacent_ideals((2, 4)).unwrap(), (x2y2(), steps(&[1, 2])));
        assert_eq!(f.adjacent_ideals((-1, 0)).unwrap(), (steps(&[1, 2]), steps(&[4])));
        assert_eq!(f.adjacent_ideals((0, 1)).unwrap(), (steps(&[1, 2]), steps(&[1, 2])));
        assert_eq!(f.graded_mismatch().unwrap(), None);
        let d = boundary_diagram(&f).unwrap();
        assert_eq!(d.entries, vec![DiagramEntry::Ideal(steps(&[1, 2])), DiagramEntry::Ray((1, 2))]);
        assert_eq!(d.above, None);
    }

    #[test]
    fn constant_fan_is_one_cone() {
        let f = standard_fan(&[Staircase::max_ideal_power(3)], None, q()).unwrap();
        assert!(f.rays.is_empty());
        assert_eq!(f.cones.len(), 1);
        assert_eq!(f.adjacent_ideals((3, -7)).unwrap().0, Staircase::max_ideal_power(3));
    }

    #[test]
    fn second_power_diagram() {
        let f = standard_fan(&[steps(&[4]).pow(2)], None, q()).unwrap();
        let d = boundary_diagram(&f).unwrap();
        assert_eq!(
            d.entries,
            vec![
                DiagramEntry::Ideal(steps(&[2, 2, 2])),
                DiagramEntry::Ray((1, 4)),
                DiagramEntry::Ideal(steps(&[1, 1, 2, 1])),
                DiagramEntry::Ray((1, 2)),
            ]
        );
        let m = median_check(&f, &steps(&[2, 2, 2]), &steps(&[1, 1, 2, 1])).unwrap();
        assert!(m.holds);
        assert_eq!(m.point, (1, 4));
        assert!(median_failures(&f).unwrap().is_empty());
    }

    #[test]
    fn median_anchor() {
        let f = standard_fan(&[steps(&[4])], None, q()).unwrap();
        let m = median_check(&f, &x2y2(), &steps(&[1, 2])).unwrap();
        assert_eq!((m.c, m.d, m.point, m.sign), (1, 1, (1, 2), 1));
        assert!(matches!(median_check(&f, &x2y2(), &x2y2()), Err(Error::Precondition(_))));
    }

    #[test]
    fn self_intersection_conventions() {
        let mk = |rays: Vec<Point>| Fan2D {
            family: GroupFamily::G41,
            ch: q(),
            sources: vec![],
            cones: vec![],
            rays,
        };
        let p2 = mk(vec![(1, 0), (0, 1), (-1, -1)]);
        assert!(p2.self_intersections().unwrap().values().all(|&v| v == 1));
        let p1p1 = mk(vec![(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert!(p1p1.self_intersections().unwrap().values().all(|&v| v == 0));
        let singular = mk(vec![(1, 2), (-1, 0), (0, -1)]);
        assert!(matches!(singular.self_intersections(), Err(Error::NotSmooth { .. })));
    }

    #[test]
    fn two_factor_fan_is_smooth_with_expected_curves() {
        let i1 = steps(&[3]);
        let i2 = Staircase::from_monomials(&[(2, 0), (1, 1), (0, 5)]).unwrap();
        let f = standard_fan(&[i1, i2], None, q()).unwrap();
        assert!(f.is_smooth());
        let si = f.self_intersections().unwrap();
        let boundary: BTreeSet<i64> = si
            .iter()
            .filter(|(r, _)| **r != (-1, 0) && **r != (0, -1))
            .map(|(_, v)| *v)
            .collect();
        assert_eq!(boundary, [0, -3].into_iter().collect());
    }

    #[test]
    fn multiplicativity_small() {
        let i = steps(&[4]);
        assert!(multiplicativity_check(&i, &i, &primitive_directions(2), q()).unwrap());
        assert!(multiplicativity_check(&i, &Staircase::max_ideal_power(1), &primitive_directions(2), q()).unwrap());
    }

    #[test]
    fn unsupported_families() {
        let i5 = steps(&[5]);
        assert!(matches!(standard_fan(&[i5], None, q()), Err(Error::UnsupportedMeasuringSequence { .. })));
        assert!(matches!(
            standard_fan(&[steps(&[4])], Some(GroupFamily::G32), q()),
            Err(Error::UnsupportedMeasuringSequence { .. })
        ));
    }
}
