//! Symmetric polynomials in the monomial and Schur bases.
//!
//! Coefficient vectors are always indexed by the partitions of `N` in the order
//! of [`crate::partitions::enumerate_partitions`]. The Schur-to-monomial map is
//! the Kostka matrix `K[J][I] = K(shape = lambda_I, content = lambda_J)`.

mod characters;
mod eval;
mod fit;
mod kostka;
mod polynomial;

pub use characters::{mn_character, power_sum_in_monomials, schur_in_power_sums, schur_via_characters, z_mu, CharacterCache};
pub use eval::{evaluate, evaluate_monomial, EvaluationPoint};
pub use fit::{default_fit_vars, fit_coefficients, FitError, FitReport, Locus};
pub use kostka::{
    inverse_kostka_matrix, kostka_matrix, kostka_number, schur_in_monomials, KostkaMatrix,
    KostkaTransform,
};
pub use polynomial::Polynomial;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Monomial,
    Schur,
}

impl Basis {
    /// `m` or `s`, the prefix used when printing terms.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
        })
    }
}

/// Homogeneous symmetric polynomial of degree `N` in one of the two bases.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymPoly {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self { degree, basis, coeffs: BTreeMap::new() }
    }

    /// Single basis element `m_lambda` or `s_lambda`.
    pub fn basis_element(lambda: &Partition, basis: Basis) -> Self {
        let mut p = Self::zero(lambda.weight(), basis);
        p.add_term(lambda.clone(), Rational::one());
        p
    }

    /// Builds from a coefficient vector of length `P(N)` in partition order.
    pub fn from_vector(degree: usize, basis: Basis, coeffs: &[Rational]) -> Self {
        let table = enumerate_partitions(degree);
        assert_eq!(coeffs.len(), table.len(), "coefficient vector must have length P(N)");
        let mut p = Self::zero(degree, basis);
        for (lambda, c) in table.ordered.into_iter().zip(coeffs) {
            p.add_term(lambda, c.clone());
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c` to the coefficient of `lambda`. Panics if `lambda` has the wrong weight.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        assert_eq!(lambda.weight(), self.degree, "partition {lambda} has the wrong weight");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    /// Dense coefficient vector of length `P(N)`.
    pub fn to_vector(&self) -> Vec<Rational> {
        enumerate_partitions(self.degree).iter().map(|l| self.coeff(l)).collect()
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), c * factor);
        }
        out
    }

    /// Sum of two polynomials in the same basis and degree.
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!((self.degree, self.basis), (other.degree, other.basis));
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

/// Renders `2*s(2,1) - s(1,1,1)` style text; zero prints as `0`.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{}{}", self.basis.symbol(), lambda)?;
        }
        Ok(())
    }
}

/// Renders a coefficient vector as `(0,0,1,0,-1)`.
pub fn format_vector(values: &[Rational]) -> String {
    let items: Vec<String> = values.iter().map(|v| alloc::format!("{v}")).collect();
    alloc::format!("({})", items.join(","))
}

/// Expresses `p` in the `target` basis via the Kostka matrix or its inverse.
pub fn convert_basis(p: &SymPoly, target: Basis) -> SymPoly {
    if p.basis == target {
        return p.clone();
    }
    KostkaTransform::new(p.degree).convert(p, target)
}
