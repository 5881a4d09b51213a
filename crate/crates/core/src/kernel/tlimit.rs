//! Flat limits of row spans along a path parameter `t` as `t` goes to infinity.
//!
//! Entries are polynomials (Laurent in `t`) whose remaining variables are treated as
//! transcendental constants, so elimination is fraction-free over the polynomial ring.

use super::matrix::rref;
use super::poly::{MultiPoly, Var, NVARS};
use super::scalar::{Characteristic, Scalar};
use crate::error::KernelError;

type Row = Vec<MultiPoly>;

fn top_t(row: &Row) -> Option<i32> {
    row.iter().filter_map(|p| p.degree(Var::T)).max()
}

fn bottom_t(row: &Row) -> Option<i32> {
    row.iter().filter_map(|p| p.min_degree(Var::T)).min()
}

fn t_shift(row: &Row, k: i32) -> Row {
    let mut e = [0; NVARS];
    e[Var::T.index()] = k;
    row.iter().map(|p| p.shift(&e)).collect()
}

/// Shifts the row so that its top `t`-exponent is zero; `None` for the zero row.
fn normalize_top(row: &Row) -> Option<Row> {
    top_t(row).map(|d| t_shift(row, -d))
}

fn lead(row: &Row) -> Row {
    row.iter().map(|p| p.coeff_of(Var::T, 0)).collect()
}

fn first_nonzero(v: &Row) -> Option<usize> {
    v.iter().position(|p| !p.is_zero())
}

/// Divides a row by its common monomial factor in the parameters and by its scalar content.
fn strip_content(row: &mut Row, ch: Characteristic) {
    let mut common: Option<[i32; NVARS]> = None;
    for p in row.iter() {
        if let Some(m) = p.monomial_content() {
            common = Some(match common {
                None => m,
                Some(mut c) => {
                    for i in 0..NVARS {
                        c[i] = c[i].min(m[i]);
                    }
                    c
                }
            });
        }
    }
    let Some(mut common) = common else { return };
    common[Var::T.index()] = 0;
    if common.iter().any(|&k| k != 0) {
        let neg = common.map(|k| -k);
        for p in row.iter_mut() {
            *p = p.shift(&neg);
        }
    }
    let all: Vec<Scalar> = row
        .iter()
        .flat_map(|p| p.terms().map(|(_, c)| c.clone()))
        .collect();
    let content = super::poly::scalar_content(all.iter(), ch);
    if !content.is_zero() && !content.is_one() {
        let inv = content.inv();
        for p in row.iter_mut() {
            *p = p.scale(&inv);
        }
    }
}

/// `p*v - e*a`, or `v - (e/p)*a` when both multipliers are constants.
fn combine(v: &Row, a: &Row, p: &MultiPoly, e: &MultiPoly) -> Row {
    match (p.constant_value(), e.constant_value()) {
        (Some(pc), Some(ec)) => {
            let f = ec.div(&pc);
            v.iter().zip(a).map(|(x, y)| x - &y.scale(&f)).collect()
        }
        _ => v.iter().zip(a).map(|(x, y)| &(p * x) - &(e * y)).collect(),
    }
}

struct Accepted {
    row: Row,
    lead: Row,
    pivot: usize,
}

/// Basis of the limit, as `t → ∞`, of the span of `rows`.
///
/// Each returned vector is free of `t`. When every entry of the limit is a constant the
/// result is the reduced row-echelon basis; otherwise rows are in fraction-free reduced
/// echelon form with monomial and scalar content removed.
pub fn t_limit_basis(rows: &[Vec<MultiPoly>]) -> Result<Vec<Vec<MultiPoly>>, KernelError> {
    let Some(first) = rows.first() else {
        return Ok(Vec::new());
    };
    let ncols = first.len();
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(KernelError::Dimension("rows of unequal length".into()));
    }
    let ch = first.first().map_or(Characteristic::ZERO, |p| p.characteristic());

    // every re-shift lowers the top exponent; the total span bounds how often that can happen
    let span_budget: i64 = rows
        .iter()
        .map(|r| match (top_t(r), bottom_t(r)) {
            (Some(a), Some(b)) => (a - b) as i64 + 1,
            _ => 1,
        })
        .sum();
    let budget = (span_budget + 1) * (rows.len() as i64 + 1) + 64;

    let mut accepted: Vec<Accepted> = Vec::new();
    for r in rows {
        let mut v = normalize_top(r).ok_or(KernelError::NotConstantRank)?;
        let mut steps: i64 = 0;
        loop {
            steps += 1;
            if steps > budget {
                return Err(KernelError::NotConstantRank);
            }
            let mut l = lead(&v);
            accepted.sort_by_key(|a| a.pivot);
            for a in &accepted {
                let e = l[a.pivot].clone();
                if e.is_zero() {
                    continue;
                }
                v = combine(&v, &a.row, &a.lead[a.pivot], &e);
                l = lead(&v);
            }
            match first_nonzero(&l) {
                Some(pivot) => {
                    strip_content(&mut v, ch);
                    let l = lead(&v);
                    accepted.push(Accepted { row: v, lead: l, pivot });
                    break;
                }
                None => {
                    v = normalize_top(&v).ok_or(KernelError::NotConstantRank)?;
                }
            }
        }
    }

    let leads: Vec<Row> = {
        accepted.sort_by_key(|a| a.pivot);
        accepted.into_iter().map(|a| a.lead).collect()
    };
    canonical_basis(leads, ch)
}

/// Canonical form of an independent family of `t`-free vectors.
fn canonical_basis(leads: Vec<Row>, ch: Characteristic) -> Result<Vec<Row>, KernelError> {
    if leads.iter().flatten().all(|p| p.is_constant()) {
        let mut scalars: Vec<Vec<Scalar>> = leads
            .iter()
            .map(|r| {
                r.iter()
                    .map(|p| p.constant_value().unwrap_or_else(|| Scalar::zero(ch)))
                    .collect()
            })
            .collect();
        rref(&mut scalars);
        return Ok(scalars
            .into_iter()
            .map(|r| r.into_iter().map(MultiPoly::constant).collect())
            .collect());
    }
    let mut rows = leads;
    let pivots: Vec<usize> = rows
        .iter()
        .map(|r| first_nonzero(r).ok_or(KernelError::NotConstantRank))
        .collect::<Result<_, _>>()?;
    for i in 0..rows.len() {
        let piv = pivots[i];
        for j in 0..rows.len() {
            if j == i || rows[j][piv].is_zero() {
                continue;
            }
            let p = rows[i][piv].clone();
            let e = rows[j][piv].clone();
            let mut nr = combine(&rows[j], &rows[i], &p, &e);
            strip_content(&mut nr, ch);
            rows[j] = nr;
        }
    }
    for r in rows.iter_mut() {
        strip_content(r, ch);
    }
    Ok(rows)
}

/// [`t_limit_basis`] for rows whose limit is parameter-free, returned as scalars.
pub fn t_limit_basis_scalar(rows: &[Vec<MultiPoly>]) -> Result<Vec<Vec<Scalar>>, KernelError> {
    let basis = t_limit_basis(rows)?;
    basis
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|p| {
                    p.constant_value().ok_or_else(|| {
                        KernelError::Dimension("limit depends on parameters".into())
                    })
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::matrix::span_reduce;

    fn parse_rows(ch: Characteristic, rows: &[&[&str]]) -> Vec<Row> {
        rows.iter()
            .map(|r| r.iter().map(|e| MultiPoly::parse(ch, e).unwrap()).collect())
            .collect()
    }

    fn ints(ch: Characteristic, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_i64(ch, v)).collect())
            .collect()
    }

    #[test]
    fn independent_leading_rows_fill_the_space() {
        let q = Characteristic::ZERO;
        let rows = parse_rows(q, &[&["t", "1"], &["1", "0"]]);
        let got = t_limit_basis_scalar(&rows).unwrap();
        assert_eq!(got, ints(q, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn cancelling_leads_drop_to_lower_order() {
        let q = Characteristic::ZERO;
        // basis x, xy, y^2, y^3
        let rows = parse_rows(q, &[&["1", "0", "t", "1"], &["0", "1", "0", "t"]]);
        let got = t_limit_basis_scalar(&rows).unwrap();
        assert_eq!(got, ints(q, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn binomial_powers_in_characteristic_two() {
        let two = Characteristic::new(2).unwrap();
        let row = |e: u32| -> Row {
            let p = MultiPoly::parse(two, "x + t").unwrap().pow(e);
            (0..=6).map(|k| p.coeff_of(Var::X, k)).collect()
        };
        let got = t_limit_basis_scalar(&[row(4), row(6)]).unwrap();
        let mut expect = ints(two, &[&[1, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0]]);
        rref(&mut expect);
        assert_eq!(got, expect);
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let q = Characteristic::ZERO;
        let rows = parse_rows(q, &[&["t", "1"], &["t^2", "t"]]);
        assert_eq!(t_limit_basis(&rows), Err(KernelError::NotConstantRank));
    }

    #[test]
    fn t_free_rows_match_span_reduce() {
        let q = Characteristic::ZERO;
        let rows = parse_rows(q, &[&["2", "4", "0"], &["1", "0", "3"]]);
        let got = t_limit_basis_scalar(&rows).unwrap();
        let expect = span_reduce(&ints(q, &[&[2, 4, 0], &[1, 0, 3]])).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn parameters_stay_symbolic() {
        let q = Characteristic::ZERO;
        // the limit direction (0, b - a, 0) degenerates only on the locus a = b
        let rows = parse_rows(q, &[&["1", "a*t", "b*t^2"], &["0", "1", "t"]]);
        let got = t_limit_basis(&rows).unwrap();
        let expect = parse_rows(q, &[&["0", "a - b", "0"], &["0", "0", "1"]]);
        assert_eq!(got, expect);
    }
}
