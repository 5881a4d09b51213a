//! Flat limits of monomial ideals: p-shifts, the line-by-line limit under `x_i ↦ x_i + t h`,
//! and limits of two-parameter orbits along monomial paths.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::geometry::primitive;
use crate::kernel::scalar::p_adic_order;
use crate::kernel::{
    echelon_pivots, rref, t_limit_basis, t_limit_basis_scalar, Characteristic, MultiPoly, Scalar, Var,
};
use crate::orbit::{by_monomial, core_under_moves, ParamIdeal};
use crate::staircase::Staircase;

/// The total order used by the p-shift: higher `p`-adic order first (`ord(0) = ∞`), then
/// smaller value. In characteristic 0 it is the usual order.
pub fn pshift_precedes(a: u64, b: u64, ch: Characteristic) -> bool {
    pshift_key(a, ch) < pshift_key(b, ch)
}

fn pshift_key(a: u64, ch: Characteristic) -> (std::cmp::Reverse<u32>, u64) {
    let ord = if ch.is_zero() {
        0
    } else {
        p_adic_order(a, ch.get()).unwrap_or(u32::MAX)
    };
    (std::cmp::Reverse(ord), a)
}

/// The p-shift of `t`: elements are processed in [`pshift_precedes`] order and each is sent
/// to the smallest unused integer divisible by `p^{ord_p}` of it.
pub fn pshift(t: &BTreeSet<u64>, ch: Characteristic) -> BTreeSet<u64> {
    if ch.is_zero() {
        return (0..t.len() as u64).collect();
    }
    let p = ch.get();
    let mut order: Vec<u64> = t.iter().copied().collect();
    order.sort_by_key(|&a| pshift_key(a, ch));
    let mut used = BTreeSet::new();
    for a in order {
        let step = match p_adic_order(a, p) {
            // 0 can only go to 0, which is always free when 0 comes first
            None => {
                used.insert(0);
                continue;
            }
            Some(k) => p.checked_pow(k).expect("p-power of an element fits in u64"),
        };
        let mut v = 0;
        while used.contains(&v) {
            v += step;
        }
        used.insert(v);
    }
    used
}

/// The p-shift computed instead as the flat limit of `span{(x+t)^e : e ∈ T}`.
pub fn pshift_via_kernel(t: &BTreeSet<u64>, ch: Characteristic) -> Result<BTreeSet<u64>> {
    let Some(&max) = t.iter().max() else {
        return Ok(BTreeSet::new());
    };
    let base = MultiPoly::parse(ch, "x + t")?;
    let rows: Vec<Vec<MultiPoly>> = t
        .iter()
        .map(|&e| {
            let p = base.pow(e as u32);
            (0..=max as i32).map(|k| p.coeff_of(Var::X, k)).collect()
        })
        .collect();
    unit_pivots(&t_limit_basis_scalar(&rows)?).map(|s| s.into_iter().map(|k| k as u64).collect())
}

/// The flat limit of `span{(x+t)^e : e ∈ T}` as `t → ∞`, read off from binomial
/// coefficients: the leading exponents of the span of `(x+1)^e`, eliminating from `x^0` up.
///
/// Agrees with [`pshift`] in characteristic 0 and often, but not always, in characteristic
/// `p` (for `T = {5, 7}`, `p = 2` this gives `{0, 2}` where the p-shift gives `{0, 1}`).
pub fn line_limit(t: &BTreeSet<u64>, ch: Characteristic) -> BTreeSet<u64> {
    let Some(&max) = t.iter().max() else {
        return BTreeSet::new();
    };
    let width = max as usize + 1;
    let rows: Vec<Vec<Scalar>> = t
        .iter()
        .map(|&e| {
            // row of C(e, s), built by the additive recurrence to stay exact in any characteristic
            let mut row = vec![Scalar::zero(ch); width];
            row[0] = Scalar::one(ch);
            for n in 1..=e as usize {
                for s in (1..=n).rev() {
                    row[s] = row[s].add(&row[s - 1]);
                }
            }
            row
        })
        .collect();
    let order: Vec<usize> = (0..width).collect();
    echelon_pivots(&rows, &order).into_iter().map(|k| k as u64).collect()
}

/// Pivot positions of a basis made of unit vectors; errors if the span is not monomial.
fn unit_pivots(basis: &[Vec<Scalar>]) -> Result<BTreeSet<usize>> {
    basis
        .iter()
        .map(|r| {
            let nz: Vec<usize> = (0..r.len()).filter(|&k| !r[k].is_zero()).collect();
            match nz.as_slice() {
                [k] => Ok(*k),
                _ => Err(Error::Invariant("limit span is not spanned by monomials".into())),
            }
        })
        .collect()
}

/// A monomial ideal of finite colength in `n` variables, stored as its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxIdeal {
    num_vars: usize,
    complement: BTreeSet<Vec<u32>>,
}

impl BoxIdeal {
    pub fn new(num_vars: usize, complement: BTreeSet<Vec<u32>>) -> Result<Self> {
        for m in &complement {
            if m.len() != num_vars {
                return Err(Error::Domain("exponent vector of the wrong length".into()));
            }
            for v in 0..num_vars {
                if m[v] > 0 {
                    let mut lower = m.clone();
                    lower[v] -= 1;
                    if !complement.contains(&lower) {
                        return Err(Error::Domain("complement is not closed under division".into()));
                    }
                }
            }
        }
        Ok(BoxIdeal { num_vars, complement })
    }

    pub fn from_staircase(s: &Staircase) -> Self {
        BoxIdeal {
            num_vars: 2,
            complement: s.boxes().map(|(i, j)| vec![i, j]).collect(),
        }
    }

    pub fn to_staircase(&self) -> Result<Staircase> {
        if self.num_vars != 2 {
            return Err(Error::Domain("only two-variable ideals have staircases".into()));
        }
        Staircase::from_boxes(&self.complement.iter().map(|m| (m[0], m[1])).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn complement(&self) -> &BTreeSet<Vec<u32>> {
        &self.complement
    }

    pub fn colength(&self) -> usize {
        self.complement.len()
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        !self.complement.contains(m)
    }
}

/// Flat limit of `g(t)(I)` as `t → ∞`, where `g(t)` sends `x_var ↦ x_var + t·h` and fixes the
/// other variables.
///
/// Monomials are grouped into lines `{x_var^a h^{d-a} f : 0 ≤ a ≤ d}` with `f` divisible by
/// neither `x_var` nor `h`; on each line the positions lying in `I` are replaced by their
/// limit under [`line_limit`]. That is the p-shift whenever the p-shift is right.
pub fn elementary_limit(ideal: &BoxIdeal, var: usize, h: &[u32], ch: Characteristic) -> Result<BoxIdeal> {
    let n = ideal.num_vars;
    if var >= n || h.len() != n {
        return Err(Error::Domain("variable index or h of the wrong size".into()));
    }
    if h[var] != 0 {
        return Err(Error::Domain("h must not involve the moving variable".into()));
    }
    if h.iter().all(|&e| e == 0) {
        return Err(Error::Domain("h must be a non-constant monomial".into()));
    }
    // line key (f, d) -> positions a outside the ideal
    let mut lines: BTreeMap<(Vec<u32>, u32), ()> = BTreeMap::new();
    for m in &ideal.complement {
        let a = m[var];
        let mut rest = m.clone();
        rest[var] = 0;
        let q = (0..n)
            .filter(|&v| h[v] > 0)
            .map(|v| rest[v] / h[v])
            .min()
            .expect("h is non-constant");
        for v in 0..n {
            rest[v] -= q * h[v];
        }
        lines.insert((rest, a + q), ());
    }
    let mut complement = BTreeSet::new();
    for (f, d) in lines.into_keys() {
        let at = |a: u32| -> Vec<u32> {
            let mut m = f.clone();
            m[var] += a;
            for v in 0..n {
                m[v] += (d - a) * h[v];
            }
            m
        };
        let inside: BTreeSet<u64> = (0..=d)
            .filter(|&a| ideal.contains(&at(a)))
            .map(|a| a as u64)
            .collect();
        let shifted = line_limit(&inside, ch);
        for a in 0..=d {
            if !shifted.contains(&(a as u64)) {
                complement.insert(at(a));
            }
        }
    }
    let out = BoxIdeal::new(n, complement)
        .map_err(|e| Error::Invariant(format!("limit is not a monomial ideal: {e}")))?;
    if out.colength() != ideal.colength() {
        return Err(Error::Invariant("limit changed the colength".into()));
    }
    Ok(out)
}

/// The same limit for two variables, computed by the kernel's Grassmannian limit on the
/// quotient by the largest monomial ideal fixed by the substitution.
///
/// `var` is 0 for `x ↦ x + t y^k` and 1 for `y ↦ y + t x^k`.
pub fn elementary_limit_via_kernel(ideal: &Staircase, var: usize, k: u32, ch: Characteristic) -> Result<Staircase> {
    if var > 1 || k == 0 {
        return Err(Error::Domain("need var in {0,1} and k ≥ 1".into()));
    }
    let (moving, other) = if var == 0 { (Var::X, Var::Y) } else { (Var::Y, Var::X) };
    let mv: (i32, i32) = if var == 0 { (-1, k as i32) } else { (k as i32, -1) };
    let high = core_under_moves(ideal, &[mv]);
    let image = &MultiPoly::var(ch, moving)
        + &MultiPoly::monomial(ch, &[(Var::T, 1), (other, k as i32)]);
    let columns: Vec<(u32, u32)> = high.boxes().collect();
    let index: BTreeMap<(u32, u32), usize> = columns.iter().enumerate().map(|(c, m)| (*m, c)).collect();
    let mut rows = Vec::new();
    for (i, j) in high.boxes().filter(|&(i, j)| ideal.contains(i, j)) {
        let mono = MultiPoly::monomial(ch, &[(Var::X, i as i32), (Var::Y, j as i32)]);
        let g = mono.substitute(moving, &image);
        let mut row = vec![MultiPoly::zero(ch); columns.len()];
        for (m, coeff) in by_monomial_with_t(&g) {
            if let Some(&c) = index.get(&m) {
                row[c] = coeff;
            }
        }
        rows.push(row);
    }
    let pivots = unit_pivots(&t_limit_basis_scalar(&rows)?)?;
    let boxes: BTreeSet<(u32, u32)> = columns
        .iter()
        .enumerate()
        .filter(|(c, _)| !pivots.contains(c))
        .map(|(_, m)| *m)
        .collect();
    Staircase::from_boxes(&boxes)
}

/// Like [`by_monomial`] but keeps `t` in the coefficients.
fn by_monomial_with_t(p: &MultiPoly) -> BTreeMap<(u32, u32), MultiPoly> {
    by_monomial(p)
}

/// Result of a directional limit: a monomial ideal, or a torus-orbit point on a ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectionalLimit {
    Monomial(Staircase),
    Orbit(OrbitPoint),
}

/// A non-monomial limit on a ray: the sandwich top plus the span of `forms`, which carry the
/// parameters back in through the torus; the orbit is parametrised by `a^{e_a} / b^{e_b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPoint {
    pub ray: (i64, i64),
    pub forms: Vec<MultiPoly>,
    pub high: Staircase,
    pub modulus: (i64, i64),
}

fn weight_key(p: &ParamIdeal, u: (i64, i64)) -> Result<impl Fn(&(u32, u32)) -> i64> {
    let (wx, wy) = p.family.ray_weights(u)?;
    Ok(move |m: &(u32, u32)| wx * m.0 as i64 + wy * m.1 as i64)
}

/// Monomial limit of the orbit along a path generic near `u`: `u` is refined by the
/// secondary direction `r`, i.e. the limit along `u + εr` for small `ε > 0`.
pub fn probe(p: &ParamIdeal, u: (i64, i64), r: (i64, i64)) -> Result<Staircase> {
    let wu = weight_key(p, u)?;
    let wr = weight_key(p, r)?;
    let mut order: Vec<usize> = (0..p.basis.len()).collect();
    order.sort_by_key(|&k| {
        let m = &p.basis[k];
        (std::cmp::Reverse(wu(m)), std::cmp::Reverse(wr(m)), k)
    });
    let pivots = echelon_pivots(p.numeric_rows(), &order);
    if pivots.len() != p.rank() {
        return Err(Error::Invariant("orbit rows lost rank at a = b = 1".into()));
    }
    let limit = p.ideal_from_columns(&pivots)?;
    if !(p.sandwich_high.leq(&limit) && limit.leq(&p.sandwich_low)) {
        return Err(Error::Invariant(format!("probe returned {limit} outside the sandwich")));
    }
    Ok(limit)
}

pub fn rot_cw(v: (i64, i64)) -> (i64, i64) {
    (v.1, -v.0)
}

pub fn rot_ccw(v: (i64, i64)) -> (i64, i64) {
    (-v.1, v.0)
}

/// Limit of `g(a t^{u₁}, b t^{u₂})(I)` as `t → ∞`.
///
/// The orbit at `(a, b)` is a torus translate of the orbit at `(1, 1)`, so the limit is the
/// space of top-weight forms of the `(1,1)` subspace under the weights of the path.
pub fn directional_limit(p: &ParamIdeal, u: (i64, i64)) -> Result<DirectionalLimit> {
    if u == (0, 0) {
        return Err(Error::Domain("direction must be nonzero".into()));
    }
    let w = weight_key(p, u)?;
    let mut order: Vec<usize> = (0..p.basis.len()).collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(w(&p.basis[k])), k));
    let mut rows: Vec<Vec<Scalar>> = p
        .numeric_rows()
        .iter()
        .map(|r| order.iter().map(|&k| r[k].clone()).collect())
        .collect();
    let pivots = rref(&mut rows);
    // restrict each echelon row to the weight of its pivot
    let mut forms: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (row, &pc) in rows.iter().zip(&pivots) {
        let top = w(&p.basis[order[pc]]);
        let form: Vec<(usize, Scalar)> = row
            .iter()
            .enumerate()
            .filter(|(c, v)| !v.is_zero() && w(&p.basis[order[*c]]) == top)
            .map(|(c, v)| (order[c], v.clone()))
            .collect();
        forms.push(form);
    }
    if forms.iter().all(|f| f.len() == 1) {
        let cols: Vec<usize> = forms.iter().map(|f| f[0].0).collect();
        return Ok(DirectionalLimit::Monomial(p.ideal_from_columns(&cols)?));
    }
    let ray = primitive(u);
    let mut polys = Vec::new();
    for f in forms {
        let terms: Vec<((u32, u32), (i64, i64), Scalar)> = f
            .into_iter()
            .map(|(c, v)| {
                let m = p.basis[c];
                let e = p.family.torus_exponent(m.0 as i64, m.1 as i64)?;
                Ok((m, e, v))
            })
            .collect::<Result<_>>()?;
        let min_a = terms.iter().map(|t| t.1 .0).min().unwrap_or(0);
        let min_b = terms.iter().map(|t| t.1 .1).min().unwrap_or(0);
        let mut poly = MultiPoly::zero(p.ch);
        for (m, e, v) in terms {
            let mono = MultiPoly::monomial(
                p.ch,
                &[
                    (Var::A, (e.0 - min_a) as i32),
                    (Var::B, (e.1 - min_b) as i32),
                    (Var::X, m.0 as i32),
                    (Var::Y, m.1 as i32),
                ],
            );
            poly = &poly + &mono.scale(&v);
        }
        poly.make_primitive();
        polys.push(poly);
    }
    Ok(DirectionalLimit::Orbit(OrbitPoint {
        ray,
        forms: polys,
        high: p.sandwich_high.clone(),
        modulus: (ray.1, ray.0),
    }))
}

/// The same limit through the kernel's t-limit with the parameters kept symbolic.
/// Returns the monomial ideal when the limit is monomial.
pub fn directional_limit_symbolic(p: &ParamIdeal, u: (i64, i64)) -> Result<Option<Staircase>> {
    let ch = p.ch;
    let subs = [
        (Var::A, MultiPoly::monomial(ch, &[(Var::A, 1), (Var::T, u.0 as i32)])),
        (Var::B, MultiPoly::monomial(ch, &[(Var::B, 1), (Var::T, u.1 as i32)])),
    ];
    let rows: Vec<Vec<MultiPoly>> = p
        .rows
        .rows()
        .map(|r| r.iter().map(|e| e.substitute_all(&subs)).collect())
        .collect();
    let basis = t_limit_basis(&rows)?;
    let mut cols = Vec::new();
    for r in &basis {
        let nz: Vec<usize> = (0..r.len()).filter(|&k| !r[k].is_zero()).collect();
        match nz.as_slice() {
            [k] => cols.push(*k),
            _ => return Ok(None),
        }
    }
    Ok(Some(p.ideal_from_columns(&cols)?))
}

/// `(I⁺, I⁻)` at a ray: the limits just clockwise and just counterclockwise of it.
pub fn ray_limits(p: &ParamIdeal, ray: (i64, i64)) -> Result<(Staircase, Staircase)> {
    let plus = probe(p, ray, rot_cw(ray))?;
    let minus = probe(p, ray, rot_ccw(ray))?;
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{apply_family, GroupFamily};
    use crate::staircase::{all_of_colength, StepSeq};

    fn q() -> Characteristic {
        Characteristic::ZERO
    }

    fn chp(p: u64) -> Characteristic {
        Characteristic::new(p).unwrap()
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    fn steps(s: &[u32]) -> Staircase {
        Staircase::from_steps(&StepSeq(s.to_vec()))
    }

    #[test]
    fn precedence() {
        assert!(pshift_precedes(2, 1, chp(2)));
        assert!(pshift_precedes(1, 3, chp(2)));
        assert!(pshift_precedes(0, 4, chp(2)));
        assert!(pshift_precedes(2, 5, q()));
        assert!(!pshift_precedes(5, 2, q()));
    }

    #[test]
    fn pshift_examples() {
        assert_eq!(pshift(&set(&[2, 5]), q()), set(&[0, 1]));
        assert_eq!(pshift(&set(&[4, 6]), chp(2)), set(&[0, 2]));
        assert_eq!(pshift(&set(&[0, 1, 2]), chp(2)), set(&[0, 1, 2]));
        assert_eq!(pshift_via_kernel(&set(&[4, 6]), chp(2)).unwrap(), set(&[0, 2]));
        assert_eq!(pshift_via_kernel(&set(&[2, 5]), q()).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn pshift_can_miss_the_limit() {
        // det [[C(5,0), C(5,1)], [C(7,0), C(7,1)]] = 2 vanishes mod 2, so x^0 ∧ x^1 is not the limit
        let t = set(&[5, 7]);
        assert_eq!(pshift(&t, chp(2)), set(&[0, 1]));
        assert_eq!(line_limit(&t, chp(2)), set(&[0, 2]));
        assert_eq!(pshift_via_kernel(&t, chp(2)).unwrap(), set(&[0, 2]));
        assert_eq!(line_limit(&t, q()), set(&[0, 1]));
    }

    #[test]
    fn elementary_examples() {
        let lim = |s: &Staircase, var: usize, h: &[u32], ch| {
            elementary_limit(&BoxIdeal::from_staircase(s), var, h, ch)
                .unwrap()
                .to_staircase()
                .unwrap()
        };
        assert_eq!(lim(&steps(&[3]), 0, &[0, 2], q()), Staircase::max_ideal_power(2));
        for p in [q(), chp(2), chp(3)] {
            assert_eq!(lim(&steps(&[2]), 0, &[0, 2], p), steps(&[2]));
        }
        let x2_y = Staircase::new(vec![1, 1]).unwrap();
        assert_eq!(lim(&x2_y, 1, &[1, 0], q()), steps(&[2]));
        assert_eq!(lim(&steps(&[4]), 0, &[0, 3], q()), steps(&[1, 2]));
        assert!(elementary_limit(&BoxIdeal::from_staircase(&steps(&[2])), 0, &[1, 0], q()).is_err());
    }

    #[test]
    fn three_variable_limit_keeps_colength() {
        let comp: BTreeSet<Vec<u32>> = [vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 1, 1]]
            .into_iter()
            .collect();
        let i = BoxIdeal::new(3, comp).unwrap();
        let j = elementary_limit(&i, 0, &[0, 1, 1], q()).unwrap();
        assert_eq!(j.colength(), 4);
    }

    #[test]
    fn kernel_reconstruction_agrees_on_small_cases() {
        for d in 1..=6 {
            for s in all_of_colength(d) {
                for k in 1..=3 {
                    for p in [q(), chp(2), chp(3)] {
                        for var in 0..2 {
                            let mut h = vec![0, 0];
                            h[1 - var] = k;
                            let a = elementary_limit(&BoxIdeal::from_staircase(&s), var, &h, p)
                                .unwrap()
                                .to_staircase()
                                .unwrap();
                            let b = elementary_limit_via_kernel(&s, var, k, p).unwrap();
                            assert_eq!(a, b, "{s} var {var} k {k} p {p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn directional_limits_of_x_y4() {
        let p = apply_family(&steps(&[4]), GroupFamily::G41, q()).unwrap();
        let mono = |u| match directional_limit(&p, u).unwrap() {
            DirectionalLimit::Monomial(s) => s,
            other => panic!("{other:?}"),
        };
        assert_eq!(mono((-1, -1)), steps(&[4]));
        assert_eq!(mono((1, 0)), Staircase::new(vec![2, 2]).unwrap());
        assert_eq!(mono((0, 1)), steps(&[1, 2]));
        match directional_limit(&p, (1, 2)).unwrap() {
            DirectionalLimit::Orbit(o) => {
                assert_eq!(o.modulus, (2, 1));
                let expect = MultiPoly::parse(q(), "a^2*y^2 - b*x*y").unwrap();
                assert!(o.forms.iter().any(|f| f == &expect || f == &-&expect), "{:?}", o.forms);
                assert!(o.forms.contains(&MultiPoly::parse(q(), "y^3").unwrap()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn symbolic_and_torus_limits_agree() {
        for src in [steps(&[4]), steps(&[4]).pow(2), steps(&[1, 3])] {
            let p = apply_family(&src, GroupFamily::G41, q()).unwrap();
            for u in [(-1, -1), (1, 0), (0, 1), (3, 1), (-2, 1), (1, -3), (2, 7)] {
                let fast = directional_limit(&p, u).unwrap();
                let slow = directional_limit_symbolic(&p, u).unwrap();
                match fast {
                    DirectionalLimit::Monomial(s) => assert_eq!(Some(s), slow, "{src} {u:?}"),
                    DirectionalLimit::Orbit(_) => assert_eq!(slow, None),
                }
            }
        }
    }

    #[test]
    fn ray_limit_examples() {
        let p = apply_family(&steps(&[4]), GroupFamily::G41, q()).unwrap();
        assert_eq!(
            ray_limits(&p, (1, 2)).unwrap(),
            (Staircase::new(vec![2, 2]).unwrap(), steps(&[1, 2]))
        );
        assert_eq!(ray_limits(&p, (0, 1)).unwrap(), (steps(&[1, 2]), steps(&[1, 2])));
        let m2 = apply_family(&Staircase::max_ideal_power(2), GroupFamily::G41, q()).unwrap();
        let m = Staircase::max_ideal_power(2);
        assert_eq!(ray_limits(&m2, (1, 2)).unwrap(), (m.clone(), m));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn chars() -> impl Strategy<Value = Characteristic> {
            prop_oneof![Just(q()), Just(chp(2)), Just(chp(3)), Just(chp(5))]
        }

        proptest! {
            #[test]
            fn pshift_invariants(t in proptest::collection::btree_set(0u64..40, 0..8), ch in chars()) {
                let s = pshift(&t, ch);
                prop_assert_eq!(s.len(), t.len());
                prop_assert_eq!(pshift(&s, ch), s.clone());
                if ch.is_zero() {
                    prop_assert_eq!(s, (0..t.len() as u64).collect::<BTreeSet<_>>());
                } else {
                    // the image of an element of order k is divisible by p^k
                    let p = ch.get();
                    let mut src: Vec<u64> = t.iter().copied().collect();
                    src.sort_by_key(|&a| pshift_key(a, ch));
                    let mut img = BTreeSet::new();
                    for a in src {
                        let k = p_adic_order(a, p).map(|k| p.pow(k)).unwrap_or(0);
                        let next = (0..).map(|i| i * k.max(1)).find(|v| !img.contains(v)).unwrap();
                        let v = if k == 0 { 0 } else { next };
                        img.insert(v);
                        if k > 0 {
                            prop_assert_eq!(v % k, 0);
                        }
                    }
                }
            }

            #[test]
            fn line_limit_matches_kernel(t in proptest::collection::btree_set(0u64..16, 0..6), ch in chars()) {
                prop_assert_eq!(line_limit(&t, ch), pshift_via_kernel(&t, ch).unwrap());
                if ch.is_zero() {
                    prop_assert_eq!(line_limit(&t, ch), pshift(&t, ch));
                }
            }

            #[test]
            fn elementary_limit_is_idempotent(d in 1u32..8, pick in 0usize..100, k in 1u32..4, ch in chars()) {
                let all = all_of_colength(d);
                let s = &all[pick % all.len()];
                let once = elementary_limit(&BoxIdeal::from_staircase(s), 0, &[0, k], ch).unwrap();
                let twice = elementary_limit(&once, 0, &[0, k], ch).unwrap();
                prop_assert_eq!(once.colength(), s.colength() as usize);
                prop_assert_eq!(once, twice);
            }
        }
    }
}
