use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{convert_basis, Basis, SymPoly};
use crate::partitions::Partition;
use crate::scalar::Scalar;

/// Values `x_1..x_m` at which to evaluate; at least one variable.
#[derive(Clone, Debug, PartialEq)]
pub struct EvaluationPoint<S> {
    values: Vec<S>,
}

impl<S> EvaluationPoint<S> {
    /// `None` for an empty list.
    pub fn new(values: Vec<S>) -> Option<Self> {
        if values.is_empty() {
            None
        } else {
            Some(Self { values })
        }
    }

    pub fn m_vars(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }
}

pub(crate) fn pow<S: Scalar>(x: &S, k: usize) -> S {
    (0..k).fold(S::one(), |acc, _| acc * x.clone())
}

/// `m_lambda(x)`: the sum over distinct rearrangements of the exponents.
///
/// Walks the variables in order and decides which remaining part (if any) the
/// current variable carries, memoised on the multiset still to place.
pub fn evaluate_monomial<S: Scalar>(lambda: &Partition, x: &[S]) -> S {
    fn go<S: Scalar>(
        i: usize,
        rest: &Partition,
        x: &[S],
        memo: &mut BTreeMap<(usize, Partition), S>,
    ) -> S {
        if rest.is_empty() {
            return S::one();
        }
        if x.len() - i < rest.len() {
            return S::zero();
        }
        if let Some(v) = memo.get(&(i, rest.clone())) {
            return v.clone();
        }
        let mut total = go(i + 1, rest, x, memo);
        for (part, _) in rest.multiplicities() {
            let mut parts = rest.parts().to_vec();
            let k = parts.iter().position(|&p| p == part).expect("part present");
            parts.remove(k);
            let smaller = Partition::from_multiset(parts);
            total = total + pow(&x[i], part) * go(i + 1, &smaller, x, memo);
        }
        memo.insert((i, rest.clone()), total.clone());
        total
    }
    go(0, lambda, x, &mut BTreeMap::new())
}

/// Evaluates `p` at `pt`; Schur input is converted to monomials exactly first.
pub fn evaluate<S: Scalar>(p: &SymPoly, pt: &EvaluationPoint<S>) -> S {
    let monomial;
    let p = match p.basis() {
        Basis::Monomial => p,
        Basis::Schur => {
            monomial = convert_basis(p, Basis::Monomial);
            &monomial
        }
    };
    p.terms().iter().fold(S::zero(), |acc, (lambda, c)| {
        acc + S::from_rational(c) * evaluate_monomial(lambda, pt.values())
    })
}
