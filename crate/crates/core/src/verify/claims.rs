//! Step-sequence formulas for the boundary ideals of the fans of `(x,y⁴)^n`.
//!
//! Each function returns the expected ideals together with the side and ray they are read
//! at, or `None` when the parameters are outside the formula's range.

use crate::fan::Point;
use crate::staircase::{Staircase, StepSeq};

/// Which side of a ray an expectation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

/// One expected equality `I^{side}(n, ray) = ideal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub side: Side,
    pub ray: Point,
    pub ideal: Staircase,
}

fn ones(k: usize) -> Vec<u32> {
    vec![1; k]
}

fn ideal(parts: &[&[u32]]) -> Staircase {
    let v: Vec<u32> = parts.concat();
    Staircase::from_steps(&StepSeq(v))
}

fn both(plus: Point, minus: Point, s: Staircase) -> Vec<Expectation> {
    vec![
        Expectation { side: Side::Plus, ray: plus, ideal: s.clone() },
        Expectation { side: Side::Minus, ray: minus, ideal: s },
    ]
}

/// `count` blocks taken cyclically from `blocks` in the given order (1-based indices).
fn cycle(blocks: &[&[u32]], order: &[usize], count: usize) -> Vec<u32> {
    (0..count).flat_map(|i| blocks[order[i % order.len()] - 1].iter().copied()).collect()
}

pub fn claim1(n: u32) -> Vec<Expectation> {
    let x2y2 = Staircase::new(vec![2, 2]).expect("valid heights").pow(n);
    both((1, 2), (1, 0), x2y2)
}

pub fn claim2(n: u32) -> Vec<Expectation> {
    let n_ = n as usize;
    let s = ideal(&[&ones(n_), &[2], &ones(n_ - 1)]);
    let ray = (2 * n as i64 - 3, 4 * n as i64 - 4);
    both(ray, (1, 2), s)
}

/// The formula and the product form it is also stated as.
pub fn claim3(n: u32) -> (Vec<Expectation>, Staircase) {
    let s: [&[u32]; 3] = [&[1, 2], &[2, 2, 2], &[3, 2, 2, 2]];
    let q = (n - 1) / 3;
    let r = n - 3 * q;
    let blocks: Vec<u32> = s[r as usize - 1]
        .iter()
        .copied()
        .chain((0..q).flat_map(|_| s[2].iter().copied()))
        .collect();
    let expected = Staircase::from_steps(&StepSeq(blocks));
    let product = Staircase::from_steps(&StepSeq(s[r as usize - 1].to_vec()))
        .multiply(&Staircase::from_steps(&StepSeq(s[2].to_vec())).pow(q));
    (
        vec![Expectation { side: Side::Plus, ray: (-1, 0), ideal: expected }],
        product,
    )
}

pub fn claim4(n: u32) -> Vec<Expectation> {
    let s: [&[u32]; 3] = [&[2, 2, 1], &[2, 2, 2], &[2, 1, 2]];
    let steps = if n % 2 == 1 {
        let k = (n as usize - 1) / 2;
        [vec![1, 2], cycle(&s, &[1, 2, 3], k)].concat()
    } else {
        cycle(&s, &[2, 3, 1], n as usize / 2)
    };
    both((0, 1), (1, 4), Staircase::from_steps(&StepSeq(steps)))
}

/// The `k` range of claim 5 for a given `n`: `[n/2] ≤ k ≤ n-1`, and `k ≥ 1` so that the
/// runs of length `k-1` exist.
pub fn claim5_range(n: u32) -> std::ops::RangeInclusive<u32> {
    (n / 2).max(1)..=n - 1
}

pub fn claim5(n: u32, k: u32) -> Option<Vec<Expectation>> {
    if !claim5_range(n).contains(&k) {
        return None;
    }
    let (a, b) = ((n - k - 1) as usize, (k - 1) as usize);
    let s = ideal(&[&ones(a), &[2], &ones(b), &[2], &ones(b), &[2], &ones(a)]);
    let ray = (2 * k as i64 - 1, 4 * k as i64);
    Some(vec![Expectation { side: Side::Minus, ray, ideal: s }])
}

/// `[(n-1)/2] ≤ k ≤ n-2`.
pub fn claim6_range(n: u32) -> std::ops::RangeInclusive<u32> {
    if n < 2 {
        #[allow(clippy::reversed_empty_ranges)]
        return 1..=0;
    }
    (n - 1) / 2..=n - 2
}

pub fn claim6(n: u32, k: u32) -> Option<Vec<Expectation>> {
    if !claim6_range(n).contains(&k) {
        return None;
    }
    let (a, b) = ((n - k - 2) as usize, k as usize);
    let s = ideal(&[&ones(a), &[2], &ones(b), &[2], &ones(b), &[2], &ones(a)]);
    let ray = (2 * k as i64 - 1, 4 * k as i64);
    Some(vec![Expectation { side: Side::Plus, ray, ideal: s }])
}

pub fn claim7(n: u32) -> Vec<Expectation> {
    let s: [&[u32]; 2] = [&[2, 2, 1, 2, 1, 2, 1, 2], &[2, 1, 2, 1, 2, 1, 2, 1]];
    let m = (n / 5) as usize;
    let (prefix, order): (&[u32], [usize; 2]) = match n % 5 {
        0 => (&[], [1, 2]),
        1 => (&[1, 2], [2, 1]),
        2 => (&[1, 1, 2, 1], [1, 2]),
        3 => (&[2, 1, 2, 1, 2], [2, 1]),
        _ => (&[1, 2, 1, 2, 1, 2, 1], [1, 2]),
    };
    let steps = [prefix.to_vec(), cycle(&s, &order, m)].concat();
    both((1, 4), (1, 3), Staircase::from_steps(&StepSeq(steps)))
}

/// Block order for `n = 3m` in claim 8. Each residue class steps through the five blocks by
/// +3 (mod 5); the order `1,2,3,4,5` would put `s2` second, which the fan of `(x,y⁴)^6`
/// does not give.
pub const CLAIM8_ORDER_3M: [usize; 5] = [1, 4, 2, 5, 3];

pub fn claim8_with_order(n: u32, order_3m: &[usize]) -> Vec<Expectation> {
    let s: [&[u32]; 5] = [
        &[2, 1, 2, 1, 2],
        &[1, 2, 1, 2, 1],
        &[2, 1, 2, 1, 1],
        &[1, 2, 1, 1, 2],
        &[2, 1, 1, 2, 1],
    ];
    let m = (n / 3) as usize;
    let (prefix, order): (&[u32], &[usize]) = match n % 3 {
        0 => (&[], order_3m),
        1 => (&[1, 2], &[2, 5, 3, 1, 4]),
        _ => (&[1, 1, 2, 1], &[3, 1, 4, 2, 5]),
    };
    let steps = [prefix.to_vec(), cycle(&s, order, m)].concat();
    both((1, 3), (3, 8), Staircase::from_steps(&StepSeq(steps)))
}

pub fn claim8(n: u32) -> Vec<Expectation> {
    claim8_with_order(n, &CLAIM8_ORDER_3M)
}
