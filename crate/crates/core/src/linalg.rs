//! Exact dense linear algebra over any [`Field`]: row reduction, rank, inverse,
//! linear solves and an incremental span basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::Field;

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vec<F>>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("system is rank deficient: rank {rank} for {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("system has no exact solution")]
    Inconsistent,
}

pub fn identity<F: Field>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns, in order.
pub fn rref<F: Field>(rows: &mut Matrix<F>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(matrix: &Matrix<F>) -> usize {
    let mut rows = matrix.clone();
    rref(&mut rows).len()
}

/// Exact inverse, or `None` when singular.
pub fn inverse<F: Field>(matrix: &Matrix<F>) -> Option<Matrix<F>> {
    let n = matrix.len();
    let mut aug: Matrix<F> = matrix
        .iter()
        .zip(identity::<F>(n))
        .map(|(row, id)| {
            assert_eq!(row.len(), n, "inverse of a non-square matrix");
            row.iter().cloned().chain(id).collect()
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `a x = b` exactly. The system may be overdetermined; it must have a
/// unique solution.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Vec<F>, SolveError> {
    let unknowns = a.first().map_or(0, Vec::len);
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(core::iter::once(rhs.clone())).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&unknowns) {
        return Err(SolveError::Inconsistent);
    }
    if pivots.len() < unknowns {
        return Err(SolveError::Underdetermined { rank: pivots.len(), unknowns });
    }
    Ok(aug.iter().take(unknowns).map(|row| row[unknowns].clone()).collect())
}

pub fn mat_vec<F: Field>(a: &Matrix<F>, v: &[F]) -> Vec<F> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(F::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}

/// Echelon basis of a growing span of fixed-length vectors.
#[derive(Clone, Debug)]
pub struct SpanBasis<F> {
    dim: usize,
    /// Each row is normalised to 1 at its pivot and zero at every other pivot.
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.dim, "vector length does not match span dimension");
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.clone() - factor.clone() * r.clone();
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` if it is independent of the current span; reports whether the
    /// rank grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / v[pivot].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, n) in row.iter_mut().zip(&v) {
                *x = x.clone() - factor.clone() * n.clone();
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

pub fn zeros<F: Field>(rows: usize, cols: usize) -> Matrix<F> {
    vec![vec![F::zero(); cols]; rows]
}
