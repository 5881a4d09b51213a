//! Dense matrices of polynomials and scalars: fraction-free determinants and canonical
//! row reduction.

use super::poly::MultiPoly;
use super::scalar::{Characteristic, Scalar};
use crate::error::KernelError;

/// A dense matrix of [`MultiPoly`] entries sharing one characteristic, with optional
/// `(i, j)` labels for the monomials `x^i y^j` indexing its columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
    column_labels: Option<Vec<(u32, u32)>>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self, KernelError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(KernelError::Dimension("ragged rows".into()));
        }
        let ch = rows.first().and_then(|r| r.first()).map(|p| p.characteristic());
        if let Some(ch) = ch {
            if rows.iter().flatten().any(|p| p.characteristic() != ch) {
                return Err(KernelError::Dimension("mixed characteristics".into()));
            }
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
            column_labels: None,
        })
    }

    pub fn with_column_labels(mut self, labels: Vec<(u32, u32)>) -> Result<Self, KernelError> {
        if labels.len() != self.cols {
            return Err(KernelError::Dimension(format!(
                "{} labels for {} columns",
                labels.len(),
                self.cols
            )));
        }
        self.column_labels = Some(labels);
        Ok(self)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn column_labels(&self) -> Option<&[(u32, u32)]> {
        self.column_labels.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[MultiPoly]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    /// The submatrix on the given columns (all rows kept).
    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let rows: Vec<Vec<MultiPoly>> = (0..self.rows)
            .map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        let labels = self
            .column_labels
            .as_ref()
            .map(|l| cols.iter().map(|&j| l[j]).collect());
        PolyMatrix {
            rows: self.rows,
            cols: cols.len(),
            entries: rows.into_iter().flatten().collect(),
            column_labels: labels,
        }
    }

    /// Applies `f` entrywise.
    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            column_labels: self.column_labels.clone(),
        }
    }

    /// Entries as scalars, if every entry is constant.
    pub fn to_scalar_rows(&self) -> Option<Vec<Vec<Scalar>>> {
        self.rows()
            .map(|r| r.iter().map(|p| p.constant_value()).collect())
            .collect()
    }
}

/// Determinant by Bareiss elimination; every division is exact, so polynomial input
/// yields polynomial output without rational functions.
pub fn det_fraction_free(m: &PolyMatrix) -> Result<MultiPoly, KernelError> {
    if m.rows != m.cols {
        return Err(KernelError::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let ch = m.entries.first().map_or(Characteristic::ZERO, |p| p.characteristic());
    if n == 0 {
        return Ok(MultiPoly::one(ch));
    }
    let mut a: Vec<Vec<MultiPoly>> = m.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = MultiPoly::one(ch);
    for k in 0..n - 1 {
        // sparsest nonzero pivot keeps intermediate products small
        let pivot = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].num_terms());
        let Some(pivot) = pivot else {
            return Ok(MultiPoly::zero(ch));
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = MultiPoly::zero(ch);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Reduces `rows` in place to reduced row-echelon form and returns the pivot columns.
/// Zero rows are removed.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv();
        for v in rows[r].iter_mut() {
            if !v.is_zero() {
                *v = v.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !pv.is_zero() {
                    *v = v.sub(&f.mul(pv));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Pivot columns of an echelon form taken with columns visited in `order`.
///
/// The result lists, in visiting order, the columns that are independent of the columns
/// visited before them; for a subspace this is its set of leading monomials.
pub fn echelon_pivots(rows: &[Vec<Scalar>], order: &[usize]) -> Vec<usize> {
    let mut work: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| order.iter().map(|&k| r[k].clone()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..order.len() {
        if r == work.len() {
            break;
        }
        let Some(p) = (r..work.len()).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let inv = work[r][col].inv();
        let (head, tail) = work.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].mul(&inv);
            for k in col..order.len() {
                if !pivot_row[k].is_zero() {
                    row[k] = row[k].sub(&f.mul(&pivot_row[k]));
                }
            }
        }
        pivots.push(order[col]);
        r += 1;
    }
    pivots
}

/// Canonical basis (reduced row-echelon form) of the span of `vectors`.
pub fn span_reduce(vectors: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, KernelError> {
    if let Some(first) = vectors.first() {
        if vectors.iter().any(|v| v.len() != first.len()) {
            return Err(KernelError::Dimension("vectors of unequal length".into()));
        }
    }
    let mut rows = vectors.to_vec();
    rref(&mut rows);
    Ok(rows)
}

pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    let mut rows = vectors.to_vec();
    rref(&mut rows).len()
}

/// Determinant of a square scalar matrix by Gaussian elimination.
pub fn det_scalar(m: &[Vec<Scalar>], ch: Characteristic) -> Result<Scalar, KernelError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(KernelError::Dimension("determinant of a non-square matrix".into()));
    }
    let mut a = m.to_vec();
    let mut det = Scalar::one(ch);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Scalar::zero(ch));
        };
        if p != k {
            a.swap(p, k);
            det = det.neg();
        }
        let piv = a[k][k].clone();
        det = det.mul(&piv);
        let inv = piv.inv();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].mul(&inv);
            for j in k..n {
                if !a[k][j].is_zero() {
                    let d = f.mul(&a[k][j]);
                    a[i][j] = a[i][j].sub(&d);
                }
            }
        }
    }
    Ok(det)
}
