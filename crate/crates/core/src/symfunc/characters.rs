use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Basis, SymPoly};
use crate::partitions::{enumerate_partitions, Partition, PartitionError};
use crate::scalar::{int, Rational};

/// Memoised Murnaghan–Nakayama evaluation of `S_N` characters.
#[derive(Clone, Debug, Default)]
pub struct CharacterCache {
    memo: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_lambda(mu)`.
    pub fn chi(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64, PartitionError> {
        if lambda.weight() != mu.weight() {
            return Err(PartitionError::WeightMismatch { left: lambda.weight(), right: mu.weight() });
        }
        Ok(self.chi_unchecked(lambda, mu))
    }

    fn chi_unchecked(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu.first();
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix of a partition");
        let l = lambda.len();
        // beta numbers lambda_i + l - i, strictly decreasing
        let beta: Vec<usize> = (1..=l).map(|i| lambda.part(i) + l - i).collect();
        let mut total = 0;
        for (k, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            // removing a border strip of size r moves one bead down by r
            let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let mut moved = beta.clone();
            moved[k] = b - r;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let parts = moved.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
            let smaller = Partition::from_multiset(parts);
            total += sign * self.chi_unchecked(&smaller, &rest);
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, PartitionError> {
    CharacterCache::new().chi(lambda, mu)
}

/// `z_mu = prod_k k^{a_k} a_k!`, so that `N!/z_mu` is the size of class `mu`.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (k, a) in mu.multiplicities() {
        for j in 1..=a {
            z *= k * j;
        }
    }
    z
}

/// Coefficients of `s_lambda = sum_mu chi_lambda(mu) p_mu / z_mu`, keyed by `mu`.
pub fn schur_in_power_sums(lambda: &Partition) -> BTreeMap<Partition, Rational> {
    let mut cache = CharacterCache::new();
    schur_in_power_sums_with(lambda, &mut cache)
}

fn schur_in_power_sums_with(lambda: &Partition, cache: &mut CharacterCache) -> BTreeMap<Partition, Rational> {
    let mut out = BTreeMap::new();
    for mu in enumerate_partitions(lambda.weight()).iter() {
        let chi = cache.chi_unchecked(lambda, mu);
        if chi != 0 {
            out.insert(mu.clone(), Rational::new(BigInt::from(chi), z_mu(mu)));
        }
    }
    out
}

/// Number of ways to send the (labelled) parts of `mu` to the rows of `nu` so
/// that row `i` receives total `nu_i`.
fn assignments(parts: &[usize], rows: &mut Vec<usize>) -> u64 {
    let Some((&first, rest)) = parts.split_first() else {
        return u64::from(rows.iter().all(|&r| r == 0));
    };
    let mut total = 0;
    for i in 0..rows.len() {
        if rows[i] >= first {
            rows[i] -= first;
            total += assignments(rest, rows);
            rows[i] += first;
        }
    }
    total
}

/// `p_mu` in the monomial basis of `m_vars` variables; `m_nu` with more than
/// `m_vars` parts vanish.
pub fn power_sum_in_monomials(mu: &Partition, m_vars: usize) -> SymPoly {
    let n = mu.weight();
    let mut out = SymPoly::zero(n, Basis::Monomial);
    for nu in enumerate_partitions(n).iter().filter(|nu| nu.len() <= m_vars) {
        let count = assignments(mu.parts(), &mut nu.parts().to_vec());
        out.add_term(nu.clone(), int(count as i64));
    }
    out
}

/// `s_lambda` from the character formula, expanded into monomials of
/// `m_vars` variables.
pub fn schur_via_characters(lambda: &Partition, m_vars: usize) -> SymPoly {
    let mut cache = CharacterCache::new();
    let n = lambda.weight();
    let mut out = SymPoly::zero(n, Basis::Monomial);
    for (mu, c) in schur_in_power_sums_with(lambda, &mut cache) {
        let p = power_sum_in_monomials(&mu, m_vars);
        for (nu, k) in p.terms() {
            out.add_term(nu.clone(), &c * k);
        }
    }
    debug_assert!(out.terms().values().all(|c| !c.is_zero()));
    out
}
