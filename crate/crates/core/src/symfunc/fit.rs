use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::eval::evaluate_monomial;
use super::{kostka_number, Basis, SymPoly};
use crate::linalg::{self, SolveError};
use crate::partitions::enumerate_partitions;
use crate::scalar::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FitError {
    #[error("fit is underdetermined on this locus: rank {rank} for {unknowns} coefficients")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("samples admit no exact solution: not a degree-{degree} symmetric polynomial on this locus")]
    Inconsistent { degree: usize },
    #[error("locus must cover at least one variable")]
    EmptyLocus,
}

/// Forced equalities among the variables: `group[i]` names the free parameter
/// that `x_{i+1}` is tied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Locus {
    group: Vec<usize>,
}

impl Locus {
    /// No constraints on `m_vars` variables.
    pub fn free(m_vars: usize) -> Self {
        Self { group: (0..m_vars).collect() }
    }

    /// Consecutive blocks of equal variables, e.g. `[2, 2]` for `(a, a, b, b)`.
    pub fn blocks(sizes: &[usize]) -> Self {
        let group = sizes.iter().enumerate().flat_map(|(g, &k)| core::iter::repeat_n(g, k)).collect();
        Self { group }
    }

    /// Arbitrary assignment of variables to parameters (relabelled densely).
    pub fn from_assignment(assignment: &[usize]) -> Self {
        let mut labels: Vec<usize> = Vec::new();
        let group = assignment
            .iter()
            .map(|a| match labels.iter().position(|l| l == a) {
                Some(k) => k,
                None => {
                    labels.push(*a);
                    labels.len() - 1
                }
            })
            .collect();
        Self { group }
    }

    pub fn m_vars(&self) -> usize {
        self.group.len()
    }

    pub fn parameters(&self) -> usize {
        self.group.iter().max().map_or(0, |g| g + 1)
    }

    pub fn assignment(&self) -> &[usize] {
        &self.group
    }

    /// Expands one value per parameter to a full point.
    pub fn point(&self, params: &[Rational]) -> Vec<Rational> {
        self.group.iter().map(|&g| params[g].clone()).collect()
    }
}

/// Default variable count for fits: one more than the degree.
pub fn default_fit_vars(n: usize) -> usize {
    n + 1
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitReport {
    pub coeffs: SymPoly,
    /// Rank of the sample matrix over the locus.
    pub rank: usize,
    pub unknowns: usize,
    pub samples: usize,
    /// Largest absolute residual over all samples; zero for every accepted fit.
    pub residual: Rational,
    pub full_rank: bool,
}

fn primes(count: usize) -> Vec<i64> {
    let mut out = Vec::new();
    let mut k = 2i64;
    while out.len() < count {
        if out.iter().all(|p| k % p != 0) {
            out.push(k);
        }
        k += 1;
    }
    out
}

/// Recovers the coefficients of an unknown degree-`n` symmetric polynomial from
/// exact evaluations on `locus`.
///
/// Sample `k` (for `k = 1..=P(n)+4`) sets parameter `j` to the `j`-th prime
/// raised to the power `k`. The linear system is solved exactly; a consistent
/// but rank-deficient system is reported as underdetermined.
pub fn fit_coefficients<E>(mut evaluator: E, n: usize, locus: &Locus, basis: Basis) -> Result<FitReport, FitError>
where
    E: FnMut(&[Rational]) -> Rational,
{
    if locus.m_vars() == 0 {
        return Err(FitError::EmptyLocus);
    }
    let table = enumerate_partitions(n);
    let unknowns = table.len();
    let samples = unknowns + 4;
    let bases: Vec<Rational> = primes(locus.parameters()).into_iter().map(int).collect();
    // columns: the chosen basis functions expressed in monomials
    let columns: Vec<Vec<(usize, Rational)>> = table
        .iter()
        .map(|shape| match basis {
            Basis::Monomial => alloc::vec![(table.position(shape).unwrap() - 1, int(1))],
            Basis::Schur => table
                .iter()
                .enumerate()
                .filter_map(|(j, content)| {
                    let k = kostka_number(shape, content).expect("equal weights");
                    (k > 0).then(|| (j, int(k as i64)))
                })
                .collect(),
        })
        .collect();
    let mut a = Vec::with_capacity(samples);
    let mut b = Vec::with_capacity(samples);
    for k in 1..=samples {
        let params: Vec<Rational> = bases.iter().map(|p| Rational::from_integer(p.to_integer().pow(k as u32))).collect();
        let x = locus.point(&params);
        let monomials: Vec<Rational> = table.iter().map(|l| evaluate_monomial(l, &x)).collect();
        let row: Vec<Rational> = columns
            .iter()
            .map(|col| col.iter().fold(Rational::zero(), |acc, (j, c)| acc + c * &monomials[*j]))
            .collect();
        a.push(row);
        b.push(evaluator(&x));
    }
    let solution = match linalg::solve(&a, &b) {
        Ok(x) => x,
        Err(SolveError::Inconsistent) => return Err(FitError::Inconsistent { degree: n }),
        Err(SolveError::Underdetermined { rank, unknowns }) => {
            return Err(FitError::Underdetermined { rank, unknowns })
        }
    };
    let residual = linalg::mat_vec(&a, &solution)
        .iter()
        .zip(&b)
        .map(|(lhs, rhs)| (lhs - rhs).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    debug_assert!(residual.is_zero());
    Ok(FitReport {
        coeffs: SymPoly::from_vector(n, basis, &solution),
        rank: unknowns,
        unknowns,
        samples,
        residual,
        full_rank: true,
    })
}
