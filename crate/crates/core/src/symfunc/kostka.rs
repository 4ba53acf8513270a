use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Basis, SymPoly};
use crate::linalg::{self, Matrix};
use crate::partitions::{enumerate_partitions, horizontal_strips, Partition, PartitionError, PartitionTable};
use crate::scalar::{int, Rational};

/// Number of semistandard tableaux of `shape` whose entries have multiplicities
/// `content`: fill letter `k` as a horizontal strip of `content_k` boxes.
pub fn kostka_number(shape: &Partition, content: &Partition) -> Result<u64, PartitionError> {
    if shape.weight() != content.weight() {
        return Err(PartitionError::WeightMismatch { left: shape.weight(), right: content.weight() });
    }
    let target = shape.parts().to_vec();
    let mut layer: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    layer.insert(vec![0; target.len()], 1);
    for &size in content.parts() {
        let mut next = BTreeMap::new();
        for (mu, count) in layer {
            for nu in horizontal_strips(&mu, &target, Some(size)) {
                *next.entry(nu).or_insert(0) += count;
            }
        }
        layer = next;
    }
    Ok(layer.get(&target).copied().unwrap_or(0))
}

/// `entries[J-1][I-1] = K(shape = lambda_I, content = lambda_J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub n: usize,
    pub entries: Vec<Vec<u64>>,
}

impl KostkaMatrix {
    /// Entry with 1-based row `j` and column `i`.
    pub fn get(&self, j: usize, i: usize) -> u64 {
        self.entries[j - 1][i - 1]
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn to_rational(&self) -> Matrix<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&k| int(k as i64)).collect())
            .collect()
    }

    /// Lower-unitriangular in partition order with a first column of ones.
    pub fn is_well_formed(&self) -> bool {
        let size = self.size();
        self.entries.iter().enumerate().all(|(j, row)| {
            row.len() == size
                && row[0] == 1
                && row[j] == 1
                && row[j + 1..].iter().all(|&k| k == 0)
        })
    }
}

pub fn kostka_matrix(n: usize) -> KostkaMatrix {
    let table = enumerate_partitions(n);
    let entries = table
        .iter()
        .map(|content| {
            table
                .iter()
                .map(|shape| kostka_number(shape, content).expect("equal weights"))
                .collect()
        })
        .collect();
    KostkaMatrix { n, entries }
}

/// Exact inverse of [`kostka_matrix`]; the product is checked to be the identity.
pub fn inverse_kostka_matrix(n: usize) -> Matrix<Rational> {
    let k = kostka_matrix(n).to_rational();
    let inv = linalg::inverse(&k).expect("Kostka matrices are unitriangular");
    assert_eq!(linalg::mat_mul(&inv, &k), linalg::identity(k.len()));
    inv
}

/// `s_lambda = sum_mu K(lambda, mu) m_mu`.
pub fn schur_in_monomials(lambda: &Partition) -> SymPoly {
    let n = lambda.weight();
    let mut out = SymPoly::zero(n, Basis::Monomial);
    for mu in enumerate_partitions(n).iter() {
        let k = kostka_number(lambda, mu).expect("equal weights");
        out.add_term(mu.clone(), int(k as i64));
    }
    out
}

/// Kostka matrix and its inverse for one `N`, for repeated conversions.
#[derive(Clone, Debug)]
pub struct KostkaTransform {
    pub table: PartitionTable,
    pub kostka: KostkaMatrix,
    forward: Matrix<Rational>,
    inverse: Matrix<Rational>,
}

impl KostkaTransform {
    pub fn new(n: usize) -> Self {
        Self::from_matrix(kostka_matrix(n))
    }

    /// Uses an already computed (for example cached) matrix.
    pub fn from_matrix(kostka: KostkaMatrix) -> Self {
        let forward = kostka.to_rational();
        let inverse = linalg::inverse(&forward).expect("Kostka matrices are unitriangular");
        Self { table: enumerate_partitions(kostka.n), kostka, forward, inverse }
    }

    pub fn n(&self) -> usize {
        self.kostka.n
    }

    pub fn inverse_matrix(&self) -> &Matrix<Rational> {
        &self.inverse
    }

    /// `Omega = K C`.
    pub fn to_monomial(&self, c: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.forward, c)
    }

    /// `C = K^-1 Omega`.
    pub fn to_schur(&self, omega: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.inverse, omega)
    }

    pub fn convert(&self, p: &SymPoly, target: Basis) -> SymPoly {
        assert_eq!(p.degree(), self.n(), "degree does not match transform");
        let v = p.to_vector();
        let out = match (p.basis(), target) {
            (a, b) if a == b => v,
            (Basis::Schur, Basis::Monomial) => self.to_monomial(&v),
            _ => self.to_schur(&v),
        };
        SymPoly::from_vector(self.n(), target, &out)
    }
}
