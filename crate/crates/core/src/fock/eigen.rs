use alloc::vec;
use alloc::vec::Vec;

use num_traits::Float;

/// Sweep budget for the cyclic Jacobi method.
pub const MAX_SWEEPS: usize = 50;
/// Default relative residual tolerance for eigenpairs.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-9;
/// Largest `|A - A^T|` entry accepted as symmetric.
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum EigenError {
    #[error("matrix is not symmetric (max |A - A^T| = {0:e})")]
    Asymmetric(f64),
    #[error("Jacobi iteration did not converge within {MAX_SWEEPS} sweeps")]
    NoConvergence,
    #[error("eigenpair residual {residual:e} exceeds tolerance {bound:e}")]
    Residual { residual: f64, bound: f64 },
    #[error("matrix is not square")]
    NotSquare,
}

/// Dense real matrix of a many-body operator in some basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ManyBodyOperator {
    pub dim: usize,
    pub matrix: Vec<Vec<f64>>,
    /// `max |A - A^T| <= SYMMETRY_TOL`.
    pub symmetric: bool,
}

impl ManyBodyOperator {
    pub fn new(matrix: Vec<Vec<f64>>) -> Result<Self, EigenError> {
        let dim = matrix.len();
        if matrix.iter().any(|row| row.len() != dim) {
            return Err(EigenError::NotSquare);
        }
        let op = Self { dim, matrix, symmetric: false };
        let symmetric = op.asymmetry() <= SYMMETRY_TOL;
        Ok(Self { symmetric, ..op })
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, matrix: vec![vec![0.0; dim]; dim], symmetric: true }
    }

    pub fn asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..i {
                worst = worst.max(Float::abs(self.matrix[i][j] - self.matrix[j][i]));
            }
        }
        worst
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.matrix[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        Float::sqrt(self.matrix.iter().flatten().map(|x| x * x).sum::<f64>())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.matrix[i][j] == 0.0))
    }
}

/// Eigenvalues (ascending) and matching unit eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

/// Cyclic Jacobi rotations followed by an explicit residual check
/// `|A v - lambda v| <= tol |A|_F` for every pair.
pub fn eigen_symmetric(op: &ManyBodyOperator, tol: f64) -> Result<EigenDecomposition, EigenError> {
    if !op.symmetric {
        return Err(EigenError::Asymmetric(op.asymmetry()));
    }
    let n = op.dim;
    let mut a = op.matrix.clone();
    let mut v: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let norm = op.frobenius_norm();
    let target = 1e-15 * norm;
    let mut sweeps = 0;
    loop {
        let off = Float::sqrt((0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum::<f64>());
        if off <= target || n < 2 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NoConvergence);
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = Float::signum(theta) / (Float::abs(theta) + Float::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / Float::sqrt(t * t + 1.0);
                let s = t * c;
                for row in a.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p][k], a[q][k]);
                    a[p][k] = c * pk - s * qk;
                    a[q][k] = s * pk + c * qk;
                }
                for row in v.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
            }
        }
    }
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n).map(|k| (a[k][k], v.iter().map(|row| row[k]).collect())).collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let bound = tol * norm;
    for (lambda, vec) in &pairs {
        let residual = Float::sqrt(
            op.matrix
                .iter()
                .zip(vec)
                .map(|(row, vi)| {
                    let av: f64 = row.iter().zip(vec).map(|(x, y)| x * y).sum();
                    (av - lambda * vi).powi(2)
                })
                .sum::<f64>(),
        );
        if residual > bound {
            return Err(EigenError::Residual { residual, bound });
        }
    }
    let (values, vectors) = pairs.into_iter().unzip();
    Ok(EigenDecomposition { values, vectors, sweeps })
}

/// Sorted eigenvalues of a symmetric operator.
pub fn eigenvalues_symmetric(op: &ManyBodyOperator, tol: f64) -> Result<Vec<f64>, EigenError> {
    eigen_symmetric(op, tol).map(|d| d.values)
}
