use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::eval::pow;
use super::{Basis, SymPoly};
use crate::partitions::enumerate_partitions;
#[cfg(test)]
use crate::partitions::Partition;
use crate::scalar::{Rational, Scalar};

/// Exact polynomial in `x_1..x_nvars`, keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, c: Rational) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector has the wrong length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn coeff(&self, exponents: &[usize]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Common total degree, or `None` when the polynomial is zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<usize>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        // adjacent transpositions generate S_m
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Monomial expansion of a symmetric homogeneous polynomial of degree `n`;
    /// `None` otherwise. The zero polynomial expands to zero in any degree.
    pub fn to_monomial_basis(&self, n: usize) -> Option<SymPoly> {
        if !self.is_zero() && (self.homogeneous_degree() != Some(n) || !self.is_symmetric()) {
            return None;
        }
        let mut out = SymPoly::zero(n, Basis::Monomial);
        for lambda in enumerate_partitions(n).iter().filter(|l| l.len() <= self.nvars) {
            let mut exps = lambda.parts().to_vec();
            exps.resize(self.nvars, 0);
            out.add_term(lambda.clone(), self.coeff(&exps));
        }
        Some(out)
    }

    /// Expands a symmetric function into `nvars` explicit variables.
    pub fn from_sympoly(p: &SymPoly, nvars: usize) -> Self {
        let p = super::convert_basis(p, Basis::Monomial);
        let mut out = Self::zero(nvars);
        for (lambda, c) in p.terms() {
            if lambda.len() > nvars {
                continue;
            }
            let mut base = lambda.parts().to_vec();
            base.resize(nvars, 0);
            for e in distinct_permutations(&base) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    pub fn evaluate<S: Scalar>(&self, x: &[S]) -> S {
        assert_eq!(x.len(), self.nvars, "point has the wrong number of variables");
        self.terms.iter().fold(S::zero(), |acc, (e, c)| {
            let term = e.iter().zip(x).fold(S::from_rational(c), |t, (&k, xi)| t * pow(xi, k));
            acc + term
        })
    }

    /// Substitutes `x_i -> y_{map[i]}`, merging variables.
    pub fn substitute(&self, map: &[usize], new_nvars: usize) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; new_nvars];
            for (i, &k) in e.iter().enumerate() {
                f[map[i]] += k;
            }
            out.add_term(f, c.clone());
        }
        out
    }
}

/// All distinct orderings of `base`.
fn distinct_permutations(base: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = base.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..sorted.len()).rev().find(|&i| sorted[i - 1] < sorted[i]) else {
            return out;
        };
        let j = (i..sorted.len()).rev().find(|&j| sorted[j] > sorted[i - 1]).expect("successor exists");
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
        out.push(sorted.clone());
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let magnitude = c.abs();
            let constant = e.iter().all(|&k| k == 0);
            if !magnitude.is_one() || constant {
                write!(f, "{magnitude}")?;
            }
            let mut first = magnitude.is_one() && !constant;
            for (i, &k) in e.iter().enumerate().filter(|(_, &k)| k > 0) {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
fn monomial_polynomial(lambda: &Partition, nvars: usize) -> Polynomial {
    Polynomial::from_sympoly(&SymPoly::basis_element(lambda, Basis::Monomial), nvars)
}
