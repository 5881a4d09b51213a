//! Equivalence of integer matrices under independent row and column permutations.

use std::collections::BTreeMap;

type Mat = [Vec<i64>];

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

fn row_sigs(m: &Mat) -> Vec<Vec<i64>> {
    m.iter().map(|r| sorted(r.clone())).collect()
}

fn col_sigs(m: &Mat, ncols: usize) -> Vec<Vec<i64>> {
    (0..ncols).map(|c| sorted(m.iter().map(|r| r[c]).collect())).collect()
}

struct Search<'a> {
    a: &'a Mat,
    b: &'a Mat,
    a_cols: Vec<Vec<i64>>,
    b_cols: Vec<Vec<i64>>,
    row_cands: Vec<Vec<usize>>,
    row_order: Vec<usize>,
    row_map: Vec<Option<usize>>,
    col_map: Vec<Option<usize>>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
}

impl Search<'_> {
    /// Maps column `c` of `a` to column `d` of `b` if consistent with every matched row.
    fn try_col(&mut self, c: usize, d: usize) -> bool {
        if self.col_used[d] || self.a_cols[c] != self.b_cols[d] {
            return false;
        }
        let ok = self
            .row_map
            .iter()
            .enumerate()
            .all(|(i, j)| j.map_or(true, |j| self.a[i][c] == self.b[j][d]));
        if ok {
            self.col_map[c] = Some(d);
            self.col_used[d] = true;
        }
        ok
    }

    fn undo_col(&mut self, c: usize) {
        if let Some(d) = self.col_map[c].take() {
            self.col_used[d] = false;
        }
    }

    fn rows(&mut self, depth: usize) -> bool {
        let Some(&i) = self.row_order.get(depth) else {
            return self.finish_cols();
        };
        for j in self.row_cands[i].clone() {
            if self.row_used[j] {
                continue;
            }
            // already-mapped columns must agree on this row pair
            let consistent = (0..self.a[i].len())
                .all(|c| self.col_map[c].map_or(true, |d| self.a[i][c] == self.b[j][d]));
            if !consistent {
                continue;
            }
            self.row_map[i] = Some(j);
            self.row_used[j] = true;
            let free: Vec<usize> =
                (0..self.a[i].len()).filter(|&c| self.col_map[c].is_none() && self.a[i][c] != 0).collect();
            if self.cols(i, j, &free, 0, depth) {
                return true;
            }
            self.row_map[i] = None;
            self.row_used[j] = false;
        }
        false
    }

    /// Places the unmapped nonzero columns of row `i` of `a` onto matching entries of row `j`.
    fn cols(&mut self, i: usize, j: usize, free: &[usize], k: usize, depth: usize) -> bool {
        let Some(&c) = free.get(k) else {
            return self.rows(depth + 1);
        };
        for d in 0..self.b[j].len() {
            if self.b[j][d] == self.a[i][c] && self.try_col(c, d) {
                if self.cols(i, j, free, k + 1, depth) {
                    return true;
                }
                self.undo_col(c);
            }
        }
        false
    }

    /// Columns that are zero in every row: any pairing of equal signatures works.
    fn finish_cols(&mut self) -> bool {
        for c in 0..self.col_map.len() {
            if self.col_map[c].is_some() {
                continue;
            }
            let d = (0..self.col_used.len()).find(|&d| !self.col_used[d] && self.a_cols[c] == self.b_cols[d]);
            match d {
                Some(d) => {
                    self.col_map[c] = Some(d);
                    self.col_used[d] = true;
                }
                None => return false,
            }
        }
        true
    }
}

/// Permutations `(rows, cols)` with `b[rows[i]][cols[c]] == a[i][c]`, if any exist.
pub fn permutation_equivalence(a: &Mat, b: &Mat) -> Option<(Vec<usize>, Vec<usize>)> {
    let nr = a.len();
    if nr != b.len() {
        return None;
    }
    let nc = a.first().map_or(0, Vec::len);
    if a.iter().chain(b).any(|r| r.len() != nc) {
        return None;
    }
    let (ra, rb) = (row_sigs(a), row_sigs(b));
    let (a_cols, b_cols) = (col_sigs(a, nc), col_sigs(b, nc));
    let count = |v: &[Vec<i64>]| v.iter().fold(BTreeMap::new(), |mut m, s| {
        *m.entry(s.clone()).or_insert(0usize) += 1;
        m
    });
    if count(&ra) != count(&rb) || count(&a_cols) != count(&b_cols) {
        return None;
    }
    let row_cands: Vec<Vec<usize>> = (0..nr).map(|i| (0..nr).filter(|&j| ra[i] == rb[j]).collect()).collect();
    let mut row_order: Vec<usize> = (0..nr).collect();
    row_order.sort_by_key(|&i| (row_cands[i].len(), std::cmp::Reverse(a[i].iter().filter(|&&v| v != 0).count())));
    let mut s = Search {
        a,
        b,
        a_cols,
        b_cols,
        row_cands,
        row_order,
        row_map: vec![None; nr],
        col_map: vec![None; nc],
        row_used: vec![false; nr],
        col_used: vec![false; nc],
    };
    if !s.rows(0) {
        return None;
    }
    let rows: Vec<usize> = s.row_map.into_iter().map(|j| j.expect("all rows mapped")).collect();
    let cols: Vec<usize> = s.col_map.into_iter().map(|d| d.expect("all columns mapped")).collect();
    Some((rows, cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn permute(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
        // out[rows[i]][cols[c]] = m[i][c]
        let mut out = vec![vec![0; cols.len()]; rows.len()];
        for (i, r) in m.iter().enumerate() {
            for (c, v) in r.iter().enumerate() {
                out[rows[i]][cols[c]] = *v;
            }
        }
        out
    }

    #[test]
    fn finds_a_shuffle_and_rejects_a_change() {
        let a = vec![vec![1, 2, 0], vec![0, 1, 1], vec![3, 0, 1]];
        let b = permute(&a, &[2, 0, 1], &[1, 2, 0]);
        let (r, c) = permutation_equivalence(&a, &b).unwrap();
        assert_eq!(permute(&a, &r, &c), b);
        let t = vec![vec![1, 0], vec![0, 1]];
        let u = vec![vec![1, 1], vec![0, 0]];
        assert!(permutation_equivalence(&t, &u).is_none());
        // same row and column signatures, different incidence
        let p = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let q = vec![vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]];
        assert!(permutation_equivalence(&p, &q).is_none());
    }

    fn shuffled(n: usize, seed: &[u32]) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..n).collect();
        for (k, s) in seed.iter().enumerate().take(n) {
            idx.swap(k, k + (*s as usize) % (n - k));
        }
        idx
    }

    proptest! {
        #[test]
        fn permuted_copies_are_found(
            m in prop::collection::vec(prop::collection::vec(-1i64..3, 6), 6),
            sr in prop::collection::vec(any::<u32>(), 6),
            sc in prop::collection::vec(any::<u32>(), 6),
        ) {
            let b = permute(&m, &shuffled(6, &sr), &shuffled(6, &sc));
            let (r, c) = permutation_equivalence(&m, &b).expect("a permuted copy is equivalent");
            prop_assert_eq!(permute(&m, &r, &c), b);
        }
    }
}
