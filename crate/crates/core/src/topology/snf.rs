//! Smith normal form over the integers.
//!
//! Boundary matrices of the complexes in this crate are sparse with mostly
//! unit entries. [`invariant_factors`] first eliminates unit pivots on a
//! sparse representation and hands whatever is left to a dense big-integer
//! reduction.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse integer matrix given by its nonzero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        if value != 0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut out = SparseMatrix::new(rows, cols);
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out.push(i, j, v);
            }
        }
        out
    }
}

/// Integer arithmetic needed by the sparse phase.
trait Entry: Clone + PartialEq + std::fmt::Debug {
    fn nil() -> Self;
    fn is_unit(&self) -> bool;
    fn is_nil(&self) -> bool;
    fn mul_sub(&self, f: &Self, v: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn nil() -> Self {
        0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn mul_sub(&self, f: &Self, v: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*v)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn is_nil(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn mul_sub(&self, f: &Self, v: &Self) -> Option<Self> {
        Some(self - f * v)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Eliminates unit pivots. Returns the number of pivots and the residual
/// rows, or `None` on overflow.
fn sparse_phase<T: Entry>(
    rows: usize,
    cols: usize,
    entries: impl Iterator<Item = (usize, usize, T)>,
) -> Option<(usize, Vec<BTreeMap<usize, T>>)> {
    let mut data: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); rows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cols];
    for (r, c, v) in entries {
        if v.is_nil() {
            continue;
        }
        data[r].insert(c, v);
        col_rows[c].insert(r);
    }
    // columns with few entries first keeps fill-in low
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by_key(|&c| (col_rows[c].len(), c));
    let mut pivots = 0;
    for c in order {
        let Some(r) = col_rows[c]
            .iter()
            .copied()
            .filter(|&r| data[r][&c].is_unit())
            .min_by_key(|&r| (data[r].len(), r))
        else {
            continue;
        };
        let pivot_row = std::mem::take(&mut data[r]);
        for col in pivot_row.keys() {
            col_rows[*col].remove(&r);
        }
        let sign = pivot_row[&c].clone();
        let others: Vec<usize> = col_rows[c].iter().copied().collect();
        for i in others {
            let f = data[i][&c].mul(&sign)?;
            for (col, v) in &pivot_row {
                let current = data[i].get(col).cloned().unwrap_or_else(T::nil);
                let updated = current.mul_sub(&f, v)?;
                if updated.is_nil() {
                    data[i].remove(col);
                    col_rows[*col].remove(&i);
                } else {
                    data[i].insert(*col, updated);
                    col_rows[*col].insert(i);
                }
            }
        }
        pivots += 1;
    }
    Some((pivots, data))
}

/// Nonzero invariant factors `d₁ | d₂ | …` of a sparse integer matrix.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let (pivots, residual) = match sparse_phase::<i64>(m.rows, m.cols, m.entries.iter().copied()) {
        Some((p, data)) => (p, to_dense(data)),
        None => {
            let (p, data) = sparse_phase::<BigInt>(
                m.rows,
                m.cols,
                m.entries.iter().map(|&(r, c, v)| (r, c, BigInt::from(v))),
            )
            .expect("big integers never overflow");
            (p, to_dense(data))
        }
    };
    let mut out = vec![BigInt::one(); pivots];
    out.extend(smith_normal_form(&residual));
    out.sort();
    out
}

fn to_dense<T: Entry>(data: Vec<BTreeMap<usize, T>>) -> Vec<Vec<BigInt>> {
    let live: Vec<BTreeMap<usize, T>> = data.into_iter().filter(|r| !r.is_empty()).collect();
    let cols: BTreeSet<usize> = live.iter().flat_map(|r| r.keys().copied()).collect();
    let index: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    live.iter()
        .map(|row| {
            let mut dense = vec![BigInt::zero(); index.len()];
            for (c, v) in row {
                dense[index[c]] = v.to_big();
            }
            dense
        })
        .collect()
}

/// Rank of a sparse integer matrix.
pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

fn min_abs_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if v.is_one() || (-v).is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Nonzero invariant factors of a dense big-integer matrix, in divisibility
/// order.
pub fn smith_normal_form(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..cols {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for i in t..rows {
                        let delta = &q * &a[i][t];
                        a[i][j] -= delta;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                }
                if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero())
            });
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    factors
}

/// Convenience wrapper for small dense `i64` matrices.
pub fn smith_normal_form_i64(m: &[Vec<i64>]) -> Vec<i64> {
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    smith_normal_form(&big)
        .into_iter()
        .map(|d| d.to_i64().expect("invariant factor fits in i64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        assert_eq!(smith_normal_form_i64(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert!(smith_normal_form_i64(&[vec![0, 0], vec![0, 0]]).is_empty());
        assert!(smith_normal_form_i64(&[]).is_empty());
    }

    #[test]
    fn coprime_diagonal() {
        assert_eq!(smith_normal_form_i64(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_normal_form_i64(&[vec![2, 0], vec![0, 4]]), vec![2, 4]);
    }

    #[test]
    fn classic_example() {
        let m = [vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(smith_normal_form_i64(&m), vec![2, 6, 12]);
    }

    #[test]
    fn sparse_matches_dense() {
        let m = vec![
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 0],
            vec![0, 0, 1, -1],
            vec![-1, 0, 0, 1],
        ];
        let factors = invariant_factors(&SparseMatrix::from_dense(&m));
        let dense: Vec<BigInt> = smith_normal_form_i64(&m).into_iter().map(BigInt::from).collect();
        assert_eq!(factors, dense);
        assert_eq!(factors.len(), 3);
    }

    #[test]
    fn torsion_survives_sparse_phase() {
        let m = vec![vec![2, 0, 1], vec![0, 2, 1], vec![0, 0, 0]];
        let factors = invariant_factors(&SparseMatrix::from_dense(&m));
        assert_eq!(factors, vec![BigInt::from(1), BigInt::from(2)]);
    }
}
