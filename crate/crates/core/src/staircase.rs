//! Finite-colength monomial ideals of `K[[x,y]]` stored as staircases of column heights.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial ideal of finite colength, stored as weakly decreasing column heights.
///
/// `heights[i]` counts the `j` with `x^i y^j` outside the ideal. The empty list is the
/// unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Staircase {
    heights: Vec<u32>,
}

/// Step sequence `(n_1, …, n_r)` naming `I(s) = (x^r, x^{r-1}y^{n_1}, …, y^{n_1+…+n_r})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StepSeq(pub Vec<u32>);

/// Measuring sequence `m(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MeasuringSequence {
    pub a: u32,
    pub b: u32,
}

impl MeasuringSequence {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Domain(format!("m({a},{b}) needs positive entries")));
        }
        Ok(MeasuringSequence { a, b })
    }

    /// The partial order `m(a,b) ≤ m(c,d)` iff `a ≤ c` and `b ≤ d`.
    pub fn leq(&self, other: &MeasuringSequence) -> bool {
        self.a <= other.a && self.b <= other.b
    }
}

impl fmt::Display for MeasuringSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m({},{})", self.a, self.b)
    }
}

impl TryFrom<Vec<u32>> for Staircase {
    type Error = Error;
    fn try_from(h: Vec<u32>) -> Result<Self> {
        Staircase::new(h)
    }
}

impl From<Staircase> for Vec<u32> {
    fn from(s: Staircase) -> Vec<u32> {
        s.heights
    }
}

impl StepSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation of step sequences.
    pub fn concat(parts: &[&[u32]]) -> StepSeq {
        StepSeq(parts.iter().flat_map(|p| p.iter().copied()).collect())
    }

    /// `Σ (r+1-i) n_i`.
    pub fn colength(&self) -> u64 {
        let r = self.0.len() as u64;
        self.0
            .iter()
            .enumerate()
            .map(|(i, &n)| (r - i as u64) * n as u64)
            .sum()
    }
}

impl fmt::Display for StepSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "I({})", parts.join(","))
    }
}

impl Staircase {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if heights.iter().any(|&h| h == 0) {
            return Err(Error::Domain("column heights must be positive".into()));
        }
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("column heights must be weakly decreasing".into()));
        }
        Ok(Staircase { heights })
    }

    /// Builds from arbitrary heights, dropping trailing zero columns.
    fn from_heights_trimmed(mut heights: Vec<u32>) -> Self {
        while heights.last() == Some(&0) {
            heights.pop();
        }
        debug_assert!(heights.windows(2).all(|w| w[0] >= w[1]));
        Staircase { heights }
    }

    pub fn unit() -> Self {
        Staircase { heights: Vec::new() }
    }

    /// `𝔪^d`.
    pub fn max_ideal_power(d: u32) -> Self {
        Staircase {
            heights: (1..=d).rev().collect(),
        }
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn is_unit(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height of column `i`, zero beyond the last column.
    pub fn height(&self, i: usize) -> u32 {
        self.heights.get(i).copied().unwrap_or(0)
    }

    /// Number of columns, i.e. the least `r` with `x^r` in the ideal.
    pub fn width(&self) -> usize {
        self.heights.len()
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        j >= self.height(i as usize)
    }

    /// Complement boxes `(i, j)`, column by column.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.heights
            .iter()
            .enumerate()
            .flat_map(|(i, &h)| (0..h).map(move |j| (i as u32, j)))
    }

    /// Minimal monomial generators `x^i y^j`, by increasing `i`.
    pub fn generators(&self) -> Vec<(u32, u32)> {
        if self.is_unit() {
            return vec![(0, 0)];
        }
        let mut out = Vec::new();
        let mut prev = u32::MAX;
        for i in 0..=self.heights.len() {
            let h = self.height(i);
            if h < prev {
                out.push((i as u32, h));
                prev = h;
            }
        }
        out
    }

    /// The staircase of the ideal generated by the given monomials.
    pub fn from_monomials(gens: &[(u32, u32)]) -> Result<Self> {
        let r = gens
            .iter()
            .filter(|g| g.1 == 0)
            .map(|g| g.0)
            .min()
            .ok_or_else(|| Error::Domain("ideal has infinite colength (no pure x-power)".into()))?;
        if !gens.iter().any(|g| g.0 == 0) {
            return Err(Error::Domain("ideal has infinite colength (no pure y-power)".into()));
        }
        let heights = (0..r)
            .map(|i| {
                gens.iter()
                    .filter(|g| g.0 <= i)
                    .map(|g| g.1)
                    .min()
                    .expect("a pure y-power bounds every column")
            })
            .collect();
        Ok(Staircase::from_heights_trimmed(heights))
    }

    /// The staircase whose complement is exactly `boxes`; fails unless the set is
    /// closed under decreasing either exponent.
    pub fn from_boxes(boxes: &std::collections::BTreeSet<(u32, u32)>) -> Result<Self> {
        let width = boxes.iter().map(|b| b.0 + 1).max().unwrap_or(0);
        let heights: Vec<u32> = (0..width)
            .map(|i| boxes.iter().filter(|b| b.0 == i).count() as u32)
            .collect();
        let s = Staircase { heights };
        if s.heights.windows(2).any(|w| w[0] < w[1])
            || s.heights.iter().any(|&h| h == 0)
            || s.colength() != boxes.len() as u64
            || !boxes.iter().all(|&(i, j)| !s.contains(i, j))
        {
            return Err(Error::Invariant("box set is not the complement of a monomial ideal".into()));
        }
        Ok(s)
    }

    pub fn from_steps(s: &StepSeq) -> Self {
        let r = s.0.len();
        let heights = (0..r).map(|i| s.0[..r - i].iter().sum()).collect();
        Staircase::from_heights_trimmed(heights)
    }

    /// The step sequence with `r` equal to the number of columns.
    pub fn to_steps(&self) -> StepSeq {
        let r = self.heights.len();
        StepSeq(
            (1..=r)
                .map(|k| self.height(r - k) - self.height(r - k + 1))
                .collect(),
        )
    }

    pub fn colength(&self) -> u64 {
        self.heights.iter().map(|&h| h as u64).sum()
    }

    /// Product ideal, via prefix sums `L_i = min_{α+β=i} (n_1+…+n_α) + (m_1+…+m_β)`.
    pub fn multiply(&self, other: &Staircase) -> Staircase {
        let prefix = |s: &StepSeq| -> Vec<u64> {
            let mut acc = vec![0u64];
            for &n in &s.0 {
                acc.push(acc.last().unwrap() + n as u64);
            }
            acc
        };
        let (n, m) = (prefix(&self.to_steps()), prefix(&other.to_steps()));
        let (r, k) = (n.len() - 1, m.len() - 1);
        let big: Vec<u64> = (0..=r + k)
            .map(|i| {
                (i.saturating_sub(k)..=i.min(r))
                    .map(|a| n[a] + m[i - a])
                    .min()
                    .unwrap()
            })
            .collect();
        let steps = big.windows(2).map(|w| (w[1] - w[0]) as u32).collect();
        Staircase::from_steps(&StepSeq(steps))
    }

    pub fn pow(&self, e: u32) -> Staircase {
        (0..e).fold(Staircase::unit(), |acc, _| acc.multiply(self))
    }

    /// Ideal sum: columnwise minimum of heights.
    pub fn add(&self, other: &Staircase) -> Staircase {
        let n = self.width().min(other.width());
        Staircase::from_heights_trimmed(
            (0..n).map(|i| self.height(i).min(other.height(i))).collect(),
        )
    }

    /// Ideal intersection: columnwise maximum of heights.
    pub fn intersect(&self, other: &Staircase) -> Staircase {
        let n = self.width().max(other.width());
        Staircase::from_heights_trimmed(
            (0..n).map(|i| self.height(i).max(other.height(i))).collect(),
        )
    }

    /// Containment `self ⊆ other`.
    pub fn leq(&self, other: &Staircase) -> bool {
        (0..other.width()).all(|i| other.height(i) <= self.height(i))
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Staircase {
        let h0 = self.height(0);
        Staircase::from_heights_trimmed(
            (0..h0)
                .map(|j| self.heights.iter().filter(|&&h| h > j).count() as u32)
                .collect(),
        )
    }

    /// Dimensions of the graded pieces of the quotient for weights `(wt_x, wt_y)`.
    pub fn graded_dims(&self, wt_x: i64, wt_y: i64) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (i, j) in self.boxes() {
            *out.entry(wt_x * i as i64 + wt_y * j as i64).or_insert(0) += 1;
        }
        out
    }

    /// Exponents of the product of all complement monomials.
    pub fn complement_product(&self) -> (u64, u64) {
        self.boxes()
            .fold((0, 0), |(a, b), (i, j)| (a + i as u64, b + j as u64))
    }

    /// Renders the staircase with `#` for complement boxes, top row first.
    pub fn ascii(&self) -> String {
        let mut out = String::new();
        for j in (0..self.height(0)).rev() {
            let line: String = self
                .heights
                .iter()
                .map(|&h| if h > j { '#' } else { '.' })
                .collect();
            out.push_str(line.trim_end_matches('.'));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_steps())
    }
}

fn max_drop(h: &[u32]) -> u32 {
    (0..h.len())
        .map(|i| h[i] - h.get(i + 1).copied().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// `a` is the largest drop between consecutive column heights and `b` the same statistic
/// on row widths, maximised over the list and floored at 1.
///
/// This is the characteristic-zero rule; it is returned unchanged in characteristic p.
pub fn measuring_sequence(ideals: &[Staircase]) -> Result<MeasuringSequence> {
    if ideals.is_empty() {
        return Err(Error::Domain("measuring sequence of an empty list".into()));
    }
    let mut a = 1;
    let mut b = 1;
    for s in ideals {
        if s.is_unit() {
            return Err(Error::Domain("measuring sequence of the unit ideal".into()));
        }
        a = a.max(max_drop(s.heights()));
        b = b.max(max_drop(s.transpose().heights()));
    }
    Ok(MeasuringSequence { a, b })
}

/// All staircases `M` with `high ⊆ M ⊆ low` and colength `d`.
pub fn enumerate_between(low: &Staircase, high: &Staircase, d: u64) -> Vec<Staircase> {
    let mut out = Vec::new();
    if !high.leq(low) || d < low.colength() || d > high.colength() {
        return out;
    }
    let n = high.width();
    // suffix sums of the bounds give the pruning window for the remaining columns
    let mut max_rest = vec![0u64; n + 1];
    let mut min_rest = vec![0u64; n + 1];
    for i in (0..n).rev() {
        max_rest[i] = max_rest[i + 1] + high.height(i) as u64;
        min_rest[i] = min_rest[i + 1] + low.height(i) as u64;
    }
    let mut cur = Vec::with_capacity(n);
    fn go(
        i: usize,
        left: u64,
        cap: u32,
        low: &Staircase,
        high: &Staircase,
        max_rest: &[u64],
        min_rest: &[u64],
        cur: &mut Vec<u32>,
        out: &mut Vec<Staircase>,
    ) {
        if i == high.width() {
            if left == 0 {
                out.push(Staircase::from_heights_trimmed(cur.clone()));
            }
            return;
        }
        if left < min_rest[i] || left > max_rest[i] {
            return;
        }
        let lo = low.height(i);
        let hi = high.height(i).min(cap);
        if lo > hi {
            return;
        }
        for h in lo..=hi {
            if h as u64 > left {
                break;
            }
            cur.push(h);
            go(i + 1, left - h as u64, h, low, high, max_rest, min_rest, cur, out);
            cur.pop();
        }
    }
    go(0, d, u32::MAX, low, high, &max_rest, &min_rest, &mut cur, &mut out);
    out
}

/// All staircases of colength `d`, i.e. partitions of `d`.
pub fn all_of_colength(d: u32) -> Vec<Staircase> {
    let high = Staircase::new(vec![d; d as usize]).expect("constant heights");
    enumerate_between(&Staircase::unit(), &high, d as u64)
}
