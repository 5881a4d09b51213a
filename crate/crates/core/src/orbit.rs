//! Coset families of automorphisms fixing `(x, y²)`, their action on monomial ideals,
//! sandwich quotients, spanning matrices, and torus weight bookkeeping.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{Characteristic, MultiPoly, PolyMatrix, Scalar, Var};
use crate::staircase::{measuring_sequence, MeasuringSequence, Staircase};

/// One of the three coset families acting on `K[[x,y]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupFamily {
    /// `x ↦ x + a y² + b y³`, `y ↦ y`.
    G41,
    /// `x ↦ x + a y²`, `y ↦ y + b x`.
    G32,
    /// `x ↦ x + a y² + b y³ + c y⁴`, `y ↦ y`.
    G51,
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::G41 => "g41",
            GroupFamily::G32 => "g32",
            GroupFamily::G51 => "g51",
        })
    }
}

impl FromStr for GroupFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g41" => Ok(GroupFamily::G41),
            "g32" => Ok(GroupFamily::G32),
            "g51" => Ok(GroupFamily::G51),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}

impl GroupFamily {
    pub fn params(self) -> &'static [Var] {
        match self {
            GroupFamily::G41 | GroupFamily::G32 => &[Var::A, Var::B],
            GroupFamily::G51 => &[Var::A, Var::B, Var::C],
        }
    }

    /// The measuring sequence bounding the ideals this family is used for.
    pub fn bound(self) -> MeasuringSequence {
        match self {
            GroupFamily::G41 => MeasuringSequence { a: 4, b: 1 },
            GroupFamily::G32 => MeasuringSequence { a: 3, b: 2 },
            GroupFamily::G51 => MeasuringSequence { a: 5, b: 1 },
        }
    }

    /// Picks the two-parameter family whose bound dominates `m`, preferring G41.
    pub fn select(m: MeasuringSequence) -> Result<Self> {
        [GroupFamily::G41, GroupFamily::G32]
            .into_iter()
            .find(|f| m.leq(&f.bound()))
            .ok_or(Error::UnsupportedMeasuringSequence {
                a: m.a,
                b: m.b,
                family: "g41/g32 (use segre3 for m(5,1))".into(),
            })
    }

    /// Images of `x` and `y`.
    pub fn substitution(self, ch: Characteristic) -> (MultiPoly, MultiPoly) {
        let p = |s: &str| MultiPoly::parse(ch, s).expect("family substitution parses");
        match self {
            GroupFamily::G41 => (p("x + a*y^2 + b*y^3"), p("y")),
            GroupFamily::G32 => (p("x + a*y^2"), p("y + b*x")),
            GroupFamily::G51 => (p("x + a*y^2 + b*y^3 + c*y^4"), p("y")),
        }
    }

    /// Exponent moves `x^i y^j ↦ x^{i+di} y^{j+dj}` generated by the substitution; a monomial
    /// ideal closed under them is fixed by every member of the family.
    fn moves(self) -> &'static [(i32, i32)] {
        match self {
            GroupFamily::G41 | GroupFamily::G51 => &[(-1, 2)],
            GroupFamily::G32 => &[(-1, 2), (1, -1)],
        }
    }

    /// Exponents of `(a, b)` in the torus scaling of the monomial `x^α y^β` that conjugates
    /// the family member at `(1, 1)` to the one at `(a, b)`.
    pub fn torus_exponent(self, alpha: i64, beta: i64) -> Result<(i64, i64)> {
        match self {
            // x ↦ b²/a³ x, y ↦ b/a y
            GroupFamily::G41 => Ok((-3 * alpha - beta, 2 * alpha + beta)),
            // x ↦ a b² x, y ↦ a b y
            GroupFamily::G32 => Ok((alpha + beta, 2 * alpha + beta)),
            GroupFamily::G51 => Err(Error::Precondition(
                "the three-parameter family has no transitive torus".into(),
            )),
        }
    }

    /// Weights `(wt x, wt y)` of the one-parameter torus realising the path
    /// `a ↦ a t^{u₁}, b ↦ b t^{u₂}`.
    pub fn ray_weights(self, u: (i64, i64)) -> Result<(i64, i64)> {
        let (m, n) = u;
        match self {
            GroupFamily::G41 => Ok((2 * n - 3 * m, n - m)),
            GroupFamily::G32 => Ok((m + 2 * n, m + n)),
            GroupFamily::G51 => Err(Error::Precondition(
                "directional weights need a two-parameter family".into(),
            )),
        }
    }
}

/// Bigraded weights of the variables and parameters, plus the scalar weights at a ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightData {
    pub x: [i64; 2],
    pub y: [i64; 2],
    pub params: Vec<(char, [i64; 2])>,
    /// `(wt x, wt y)` along the ray, for two-parameter families.
    pub at_ray: Option<(i64, i64)>,
}

pub fn weight_data(family: GroupFamily, u: (i64, i64)) -> WeightData {
    let x = [1, 0];
    let y = [0, 1];
    let params = match family {
        GroupFamily::G41 => vec![('a', [1, -2]), ('b', [1, -3])],
        GroupFamily::G32 => vec![('a', [1, -2]), ('b', [-1, 1])],
        GroupFamily::G51 => vec![('a', [1, -2]), ('b', [1, -3]), ('c', [1, -4])],
    };
    WeightData {
        x,
        y,
        params,
        at_ray: family.ray_weights(u).ok(),
    }
}

/// Largest monomial ideal inside `ideal` that is closed under the family's moves; it
/// contains `𝔪^d` for `d` the colength.
pub fn invariant_core(ideal: &Staircase, family: GroupFamily) -> Staircase {
    core_under_moves(ideal, family.moves())
}

/// Largest monomial ideal inside `ideal` closed under the exponent moves `(di, dj)`.
///
/// Every move must send `𝔪^d` into itself (`di + dj ≥ 0`), so the search is confined to
/// monomials of degree below the colength `d`.
pub fn core_under_moves(ideal: &Staircase, moves: &[(i32, i32)]) -> Staircase {
    debug_assert!(moves.iter().all(|&(di, dj)| di + dj >= 0));
    let d = ideal.colength() as i64;
    let in_region = |i: i64, j: i64| i >= 0 && j >= 0 && i + j < d;
    let mut keep: BTreeSet<(i64, i64)> = BTreeSet::new();
    for i in 0..d {
        for j in 0..d - i {
            if ideal.contains(i as u32, j as u32) {
                keep.insert((i, j));
            }
        }
    }
    loop {
        let bad = |p: (i64, i64)| in_region(p.0, p.1) && !keep.contains(&p);
        let drop: Vec<(i64, i64)> = keep
            .iter()
            .copied()
            .filter(|&(i, j)| {
                moves.iter().any(|&(di, dj)| {
                    let (ni, nj) = (i + di as i64, j + dj as i64);
                    ni >= 0 && nj >= 0 && bad((ni, nj))
                }) || bad((i + 1, j))
                    || bad((i, j + 1))
            })
            .collect();
        if drop.is_empty() {
            break;
        }
        for p in drop {
            keep.remove(&p);
        }
    }
    let mut h: Vec<u32> = (0..d)
        .map(|i| (0..d - i).find(|&j| keep.contains(&(i, j))).unwrap_or(d - i) as u32)
        .collect();
    while h.last() == Some(&0) {
        h.pop();
    }
    Staircase::new(h).expect("core of an ideal is an ideal")
}

/// Column order used throughout: descending `2i + j`, then descending power of `y`.
pub fn column_order(m: &(u32, u32)) -> (std::cmp::Reverse<u32>, std::cmp::Reverse<u32>) {
    (std::cmp::Reverse(2 * m.0 + m.1), std::cmp::Reverse(m.1))
}

/// The orbit of a monomial ideal under a coset family, presented in a sandwich quotient.
#[derive(Clone, Debug)]
pub struct ParamIdeal {
    pub family: GroupFamily,
    pub ch: Characteristic,
    pub source: Staircase,
    /// Substituted minimal generators of the source.
    pub generators: Vec<MultiPoly>,
    pub sandwich_low: Staircase,
    pub sandwich_high: Staircase,
    /// Monomials of `sandwich_low` outside `sandwich_high`, in column order.
    pub basis: Vec<(u32, u32)>,
    /// Monomials `m` of the source outside `sandwich_high`; row `k` is `g(m_k)`.
    pub row_monomials: Vec<(u32, u32)>,
    pub rows: PolyMatrix,
    numeric: Vec<Vec<Scalar>>,
    column_index: BTreeMap<(u32, u32), usize>,
}

/// Images `X^i Y^j` of monomials under the family, with cached powers.
struct MonomialImages {
    xs: Vec<MultiPoly>,
    ys: Vec<MultiPoly>,
}

impl MonomialImages {
    fn new(family: GroupFamily, ch: Characteristic) -> Self {
        let (x, y) = family.substitution(ch);
        MonomialImages { xs: vec![MultiPoly::one(ch), x], ys: vec![MultiPoly::one(ch), y] }
    }

    fn power(cache: &mut Vec<MultiPoly>, k: usize) -> MultiPoly {
        while cache.len() <= k {
            let next = cache.last().unwrap() * &cache[1];
            cache.push(next);
        }
        cache[k].clone()
    }

    fn image(&mut self, i: u32, j: u32) -> MultiPoly {
        let xi = Self::power(&mut self.xs, i as usize);
        let yj = Self::power(&mut self.ys, j as usize);
        &xi * &yj
    }
}

pub(crate) fn xy_exponents(e: &[i32; 6]) -> (u32, u32) {
    (e[Var::X.index()] as u32, e[Var::Y.index()] as u32)
}

/// Splits `p` by its x,y-monomials, keeping the parameter coefficients.
pub(crate) fn by_monomial(p: &MultiPoly) -> BTreeMap<(u32, u32), MultiPoly> {
    let mut out: BTreeMap<(u32, u32), MultiPoly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut f = *e;
        f[Var::X.index()] = 0;
        f[Var::Y.index()] = 0;
        out.entry(xy_exponents(e))
            .or_insert_with(|| MultiPoly::zero(p.characteristic()))
            .add_term(f, c);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The family's orbit of `ideal` with the generic support/core sandwich.
pub fn apply_family(ideal: &Staircase, family: GroupFamily, ch: Characteristic) -> Result<ParamIdeal> {
    if ideal.is_unit() {
        return Err(Error::Domain("the unit ideal has no orbit".into()));
    }
    let mut images = MonomialImages::new(family, ch);
    let generators: Vec<MultiPoly> = ideal
        .generators()
        .iter()
        .map(|&(i, j)| images.image(i, j))
        .collect();
    let support: Vec<(u32, u32)> = generators
        .iter()
        .flat_map(|g| by_monomial(g).into_keys())
        .collect();
    let low = Staircase::from_monomials(&support)?;
    let high = invariant_core(ideal, family);
    ParamIdeal::build(family, ch, ideal.clone(), generators, low, high, &mut images)
}

/// As [`apply_family`] with a caller-chosen sandwich; both ideals must be fixed by the
/// family and bracket the source.
pub fn apply_family_with_sandwich(
    ideal: &Staircase,
    family: GroupFamily,
    ch: Characteristic,
    low: Staircase,
    high: Staircase,
) -> Result<ParamIdeal> {
    if !high.leq(ideal) || !ideal.leq(&low) {
        return Err(Error::Precondition("sandwich does not bracket the source".into()));
    }
    if invariant_core(&high, family) != high {
        return Err(Error::Precondition("upper sandwich ideal is not fixed by the family".into()));
    }
    let mut images = MonomialImages::new(family, ch);
    let generators = ideal
        .generators()
        .iter()
        .map(|&(i, j)| images.image(i, j))
        .collect();
    ParamIdeal::build(family, ch, ideal.clone(), generators, low, high, &mut images)
}

impl ParamIdeal {
    fn build(
        family: GroupFamily,
        ch: Characteristic,
        source: Staircase,
        generators: Vec<MultiPoly>,
        low: Staircase,
        high: Staircase,
        images: &mut MonomialImages,
    ) -> Result<Self> {
        let low_boxes: BTreeSet<(u32, u32)> = low.boxes().collect();
        let mut basis: Vec<(u32, u32)> = high.boxes().filter(|m| !low_boxes.contains(m)).collect();
        basis.sort_by_key(column_order);
        let column_index: BTreeMap<(u32, u32), usize> =
            basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut row_monomials: Vec<(u32, u32)> = high
            .boxes()
            .filter(|&(i, j)| source.contains(i, j))
            .collect();
        row_monomials.sort_by_key(column_order);

        let mut rows = Vec::with_capacity(row_monomials.len());
        for &(i, j) in &row_monomials {
            let img = images.image(i, j);
            let mut row = vec![MultiPoly::zero(ch); basis.len()];
            for (m, coeff) in by_monomial(&img) {
                if high.contains(m.0, m.1) {
                    continue;
                }
                let k = *column_index.get(&m).ok_or_else(|| {
                    Error::Invariant(format!("image of x^{i}y^{j} leaves the lower sandwich at x^{}y^{}", m.0, m.1))
                })?;
                row[k] = coeff;
            }
            rows.push(row);
        }
        let numeric: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|p| {
                        p.evaluate_at_one(family.params())
                            .constant_value()
                            .unwrap_or_else(|| Scalar::zero(ch))
                    })
                    .collect()
            })
            .collect();
        let rows = PolyMatrix::from_rows(rows)?.with_column_labels(basis.clone())?;
        Ok(ParamIdeal {
            family,
            ch,
            source,
            generators,
            sandwich_low: low,
            sandwich_high: high,
            basis,
            row_monomials,
            rows,
            numeric,
            column_index,
        })
    }

    /// The rows evaluated at all parameters equal to 1.
    pub fn numeric_rows(&self) -> &[Vec<Scalar>] {
        &self.numeric
    }

    pub fn rank(&self) -> usize {
        self.row_monomials.len()
    }

    pub fn is_constant(&self) -> bool {
        self.rows.rows().flatten().all(|p| p.is_constant())
    }

    pub fn column_of(&self, m: (u32, u32)) -> Option<usize> {
        self.column_index.get(&m).copied()
    }

    /// Basis columns lying in the monomial ideal `m`, which must sit in the sandwich.
    pub fn columns_of(&self, m: &Staircase) -> Result<Vec<usize>> {
        if !self.sandwich_high.leq(m) || !m.leq(&self.sandwich_low) {
            return Err(Error::Precondition(format!("{m} is not in the sandwich")));
        }
        Ok(self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| m.contains(b.0, b.1))
            .map(|(k, _)| k)
            .collect())
    }

    /// The monomial ideal spanned by the sandwich top and the given basis columns.
    pub fn ideal_from_columns(&self, cols: &[usize]) -> Result<Staircase> {
        let chosen: BTreeSet<(u32, u32)> = cols.iter().map(|&k| self.basis[k]).collect();
        let boxes: BTreeSet<(u32, u32)> = self
            .sandwich_high
            .boxes()
            .filter(|b| !chosen.contains(b))
            .collect();
        Staircase::from_boxes(&boxes)
    }

    /// Parameter exponents of the minor on the given columns, from weights alone.
    pub fn minor_exponent(&self, columns: &[(u32, u32)]) -> Result<(i64, i64)> {
        if columns.len() != self.rank() {
            return Err(Error::Precondition(format!(
                "{} columns for a rank {} family",
                columns.len(),
                self.rank()
            )));
        }
        let sum = |cs: &mut dyn Iterator<Item = (u32, u32)>| {
            cs.fold((0i64, 0i64), |(a, b), (i, j)| (a + i as i64, b + j as i64))
        };
        let (ci, cj) = sum(&mut columns.iter().copied());
        let (si, sj) = sum(&mut self.row_monomials.iter().copied());
        let (ea, eb) = self.family.torus_exponent(ci - si, cj - sj)?;
        if ea < 0 || eb < 0 {
            return Err(Error::StructurallyZeroMinor(format!(
                "weights force a^{ea} b^{eb}"
            )));
        }
        Ok((ea, eb))
    }

    /// Parameter exponents of the coordinate indexed by the monomial ideal `m`.
    pub fn exponent_of(&self, m: &Staircase) -> Result<(i64, i64)> {
        let cols: Vec<(u32, u32)> = self.columns_of(m)?.into_iter().map(|k| self.basis[k]).collect();
        self.minor_exponent(&cols)
    }
}

/// `M_m`: rows `g(x^c) x^d y^e` with `4c+2d+e ∈ {4m, 4m+1}`, `c > 0`, ordered by `c`, then
/// `d`, then `e`, reduced modulo `I(2)^{2m}` over the columns of `I(2)^m / I(2)^{2m}`.
pub fn spanning_matrix_m41(m: u32, ch: Characteristic) -> Result<PolyMatrix> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let mut columns: Vec<(u32, u32)> = Vec::new();
    for w in 2 * m..4 * m {
        for i in 0..=w / 2 {
            columns.push((i, w - 2 * i));
        }
    }
    columns.sort_by_key(column_order);
    let index: BTreeMap<(u32, u32), usize> =
        columns.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut images = MonomialImages::new(GroupFamily::G41, ch);
    let mut rows = Vec::new();
    for c in 1..=m {
        for d in 0..=2 * m {
            for total in [4 * m, 4 * m + 1] {
                let Some(e) = total.checked_sub(4 * c + 2 * d) else { continue };
                let img = &images.image(c, 0) * &MultiPoly::monomial(ch, &[(Var::X, d as i32), (Var::Y, e as i32)]);
                let mut row = vec![MultiPoly::zero(ch); columns.len()];
                for (mono, coeff) in by_monomial(&img) {
                    if 2 * mono.0 + mono.1 >= 4 * m {
                        continue;
                    }
                    let k = index.get(&mono).ok_or_else(|| {
                        Error::Invariant(format!("x^{}y^{} outside I(2)^{m}", mono.0, mono.1))
                    })?;
                    row[*k] = coeff;
                }
                rows.push(row);
            }
        }
    }
    Ok(PolyMatrix::from_rows(rows)?.with_column_labels(columns)?)
}

/// `(I(2)^m, I(2)^{2m})`, the tight sandwich for the orbit of `(x,y⁴)^m`.
pub fn tight_sandwich_m41(m: u32) -> (Staircase, Staircase) {
    let i2 = Staircase::from_steps(&crate::staircase::StepSeq(vec![2]));
    (i2.pow(m), i2.pow(2 * m))
}

/// Joint measuring sequence and family choice for a list of ideals.
pub fn choose_family(ideals: &[Staircase]) -> Result<GroupFamily> {
    GroupFamily::select(measuring_sequence(ideals)?)
}
