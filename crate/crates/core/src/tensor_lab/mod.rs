//! Small explicit computations in `(C^m)^{(x) n}`.
//!
//! Vectors are sparse maps from index tuples (1-based levels) to exact
//! scalars, so span membership and invariance questions are decided by exact
//! rank rather than by a tolerance.

mod examples;
mod experiments;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

pub use examples::{
    generic_rational_unitary, hadamard, isotypic_basis, phi_basis, psi_basis, rmatrix_basis,
    rmatrix_mixing, standard_tableaux, symmetric_basis, antisymmetric_pair_basis, w_q2_basis,
    young_symmetrizer_image,
};
pub use experiments::{experiment_names, run_experiment, Claim, Experiment};

use crate::linalg::{Matrix, SpanBasis};
use crate::partitions::{enumerate_partitions, sn_irrep_dim, um_irrep_dim, Partition};
use crate::scalar::{Field, Rational};
use crate::symfunc::{convert_basis, Basis, Polynomial, SymPoly};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("ket {0:?} does not have the expected number of factors")]
    Length(Vec<usize>),
    #[error("level {level} outside 1..={m}")]
    Level { level: usize, m: usize },
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("operands live in different tensor spaces")]
    Shape,
    #[error("basis vectors are linearly dependent")]
    Dependent,
    #[error("basis vector {0} mixes different total energies")]
    NotEnergyEigenbasis(usize),
}

/// Sparse vector in `(F^m)^{(x) n}`; zero amplitudes are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector<F> {
    m: usize,
    n: usize,
    amps: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> TensorVector<F> {
    pub fn zero(m: usize, n: usize) -> Self {
        Self { m, n, amps: BTreeMap::new() }
    }

    /// Single basis ket `|i_1 i_2 ... i_n>`.
    pub fn ket(m: usize, levels: &[usize]) -> Result<Self, TensorError> {
        let mut v = Self::zero(m, levels.len());
        v.add_ket(F::one(), levels)?;
        Ok(v)
    }

    /// Sum of `c |ket>` terms; repeated kets accumulate.
    pub fn from_terms(m: usize, n: usize, terms: &[(F, &[usize])]) -> Result<Self, TensorError> {
        let mut v = Self::zero(m, n);
        for (c, ket) in terms {
            v.add_ket(c.clone(), ket)?;
        }
        Ok(v)
    }

    pub fn add_ket(&mut self, c: F, ket: &[usize]) -> Result<(), TensorError> {
        if ket.len() != self.n {
            return Err(TensorError::Length(ket.to_vec()));
        }
        if let Some(&level) = ket.iter().find(|&&l| l == 0 || l > self.m) {
            return Err(TensorError::Level { level, m: self.m });
        }
        self.accumulate(ket.to_vec(), c);
        Ok(())
    }

    fn accumulate(&mut self, ket: Vec<usize>, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.amps.entry(ket.clone()).or_insert_with(F::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.amps.remove(&ket);
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitude(&self, ket: &[usize]) -> F {
        self.amps.get(ket).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &F)> {
        self.amps.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn support_len(&self) -> usize {
        self.amps.len()
    }

    pub fn plus(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.amps {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (k, a) in &self.amps {
            out.accumulate(k.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Bilinear pairing `sum_k v_k w_k`; equals the inner product for real scalars.
    pub fn dot(&self, other: &Self) -> Result<F, TensorError> {
        self.check_shape(other)?;
        Ok(self.amps.iter().fold(F::zero(), |acc, (k, c)| match other.amps.get(k) {
            Some(d) => acc + c.clone() * d.clone(),
            None => acc,
        }))
    }

    fn check_shape(&self, other: &Self) -> Result<(), TensorError> {
        if (self.m, self.n) == (other.m, other.n) {
            Ok(())
        } else {
            Err(TensorError::Shape)
        }
    }

    /// Position of a ket in the dense base-`m` ordering.
    fn dense_index(&self, ket: &[usize]) -> usize {
        ket.iter().fold(0, |acc, &l| acc * self.m + (l - 1))
    }

    pub fn ambient_dim(&self) -> usize {
        self.m.pow(self.n as u32)
    }

    pub fn to_dense(&self) -> Vec<F> {
        let mut out = vec![F::zero(); self.ambient_dim()];
        for (k, c) in &self.amps {
            out[self.dense_index(k)] = c.clone();
        }
        out
    }

    /// Embeds the amplitudes into a larger field.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> TensorVector<G> {
        let mut out = TensorVector::zero(self.m, self.n);
        for (k, c) in &self.amps {
            out.accumulate(k.clone(), f(c));
        }
        out
    }

    /// Sorted multiset of levels shared by every ket, if there is one.
    pub fn common_weight(&self) -> Option<Vec<usize>> {
        let mut weights = self.amps.keys().map(|k| {
            let mut w = k.clone();
            w.sort_unstable();
            w
        });
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }
}

impl<F: Field + fmt::Display> fmt::Display for TensorVector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.amps.is_empty() {
            return f.write_str("0");
        }
        let compact = self.m <= 9;
        for (i, (ket, c)) in self.amps.iter().enumerate() {
            let text = alloc::format!("{c}");
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, text.as_str()),
            };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if body != "1" {
                if body.contains(' ') {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
            }
            f.write_str("|")?;
            for (j, l) in ket.iter().enumerate() {
                if j > 0 && !compact {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(">")?;
        }
        Ok(())
    }
}

/// Checks that `sigma` (0-based images) is a permutation of `0..n`.
fn check_permutation(sigma: &[usize], n: usize) -> Result<(), TensorError> {
    let mut seen = vec![false; n];
    if sigma.len() != n {
        return Err(TensorError::NotPermutation(n));
    }
    for &s in sigma {
        if s >= n || seen[s] {
            return Err(TensorError::NotPermutation(n));
        }
        seen[s] = true;
    }
    Ok(())
}

/// Moves the factor in slot `k` to slot `sigma[k]` (0-based images).
///
/// This is a left action: applying `tau` then `sigma` equals applying
/// `sigma o tau`.
pub fn permutation_apply<F: Field>(sigma: &[usize], v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
    check_permutation(sigma, v.n)?;
    let mut out = TensorVector::zero(v.m, v.n);
    for (ket, c) in &v.amps {
        let mut moved = vec![0; v.n];
        for (k, &l) in ket.iter().enumerate() {
            moved[sigma[k]] = l;
        }
        out.accumulate(moved, c.clone());
    }
    Ok(out)
}

/// Transposition of slots `a` and `b` (1-based) as 0-based images.
pub fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.swap(a - 1, b - 1);
    sigma
}

/// `U (x) ... (x) U` applied to `v`, with `U[k][i]` the amplitude of level
/// `k+1` in the image of level `i+1`.
pub fn single_particle_transform<F: Field>(u: &Matrix<F>, v: &TensorVector<F>) -> Result<TensorVector<F>, TensorError> {
    if u.len() != v.m || u.iter().any(|row| row.len() != v.m) {
        return Err(TensorError::Shape);
    }
    let mut out = TensorVector::zero(v.m, v.n);
    for (ket, c) in &v.amps {
        // expand factor by factor
        let mut partial: Vec<(Vec<usize>, F)> = vec![(Vec::new(), c.clone())];
        for &l in ket {
            let mut next = Vec::new();
            for (prefix, a) in &partial {
                for (k, row) in u.iter().enumerate() {
                    if row[l - 1].is_zero() {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(k + 1);
                    next.push((p, a.clone() * row[l - 1].clone()));
                }
            }
            partial = next;
        }
        for (k, a) in partial {
            out.accumulate(k, a);
        }
    }
    Ok(out)
}

/// An operator whose expectation value can be taken.
#[derive(Clone, Debug, PartialEq)]
pub enum Observable<F> {
    /// `|w><w|`.
    Projector(TensorVector<F>),
    /// Dense matrix in the base-`m` ordering of kets.
    Dense(Matrix<F>),
}

/// `<v|O|v>` with `v` taken as given, not normalized.
pub fn expectation<F: Field>(observable: &Observable<F>, v: &TensorVector<F>) -> Result<F, TensorError> {
    match observable {
        Observable::Projector(w) => {
            let overlap = w.dot(v)?;
            Ok(overlap.clone() * overlap)
        }
        Observable::Dense(o) => {
            let dim = v.ambient_dim();
            if o.len() != dim || o.iter().any(|row| row.len() != dim) {
                return Err(TensorError::Shape);
            }
            let dense = v.to_dense();
            let mut total = F::zero();
            for (i, row) in o.iter().enumerate() {
                if dense[i].is_zero() {
                    continue;
                }
                let ov = row.iter().zip(&dense).fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
                total = total + dense[i].clone() * ov;
            }
            Ok(total)
        }
    }
}

/// Linearly independent list of vectors in one tensor space.
#[derive(Clone, Debug)]
pub struct SubspaceBasis<F> {
    vectors: Vec<TensorVector<F>>,
    span: SpanBasis<F>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn new(vectors: Vec<TensorVector<F>>) -> Result<Self, TensorError> {
        let Some(first) = vectors.first() else {
            return Ok(Self { vectors, span: SpanBasis::new(0) });
        };
        let (m, n) = (first.m, first.n);
        let mut span = SpanBasis::new(first.ambient_dim());
        for v in &vectors {
            if (v.m, v.n) != (m, n) {
                return Err(TensorError::Shape);
            }
            if !span.insert(&v.to_dense()) {
                return Err(TensorError::Dependent);
            }
        }
        Ok(Self { vectors, span })
    }

    /// Keeps the vectors that enlarge the span, in order.
    pub fn independent_subset(vectors: impl IntoIterator<Item = TensorVector<F>>) -> Self {
        let mut kept = Vec::new();
        let mut span: Option<SpanBasis<F>> = None;
        for v in vectors {
            let s = span.get_or_insert_with(|| SpanBasis::new(v.ambient_dim()));
            if s.insert(&v.to_dense()) {
                kept.push(v);
            }
        }
        Self { vectors: kept, span: span.unwrap_or_else(|| SpanBasis::new(0)) }
    }

    pub fn vectors(&self) -> &[TensorVector<F>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn contains(&self, v: &TensorVector<F>) -> bool {
        match self.vectors.first() {
            Some(first) if (first.m, first.n) == (v.m, v.n) => self.span.contains(&v.to_dense()),
            Some(_) => false,
            None => v.is_zero(),
        }
    }

    /// Every image `g v` of a basis vector stays in the span.
    pub fn is_stable_under(&self, g: impl Fn(&TensorVector<F>) -> TensorVector<F>) -> bool {
        self.vectors.iter().all(|v| self.contains(&g(v)))
    }
}

/// Exact span membership.
pub fn span_membership<F: Field>(basis: &SubspaceBasis<F>, v: &TensorVector<F>) -> bool {
    basis.contains(v)
}

/// One row of a Schur–Weyl decomposition of `(C^m)^{(x) n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionRow {
    pub partition: Partition,
    /// Dimension of the symmetric-group irrep.
    pub sn_dim: u128,
    /// Dimension of the unitary-group irrep.
    pub um_dim: u128,
    pub product: u128,
}

/// Rows for every `lambda |- n` with at most `m` parts.
pub fn decomposition_table(n: usize, m: usize) -> Vec<DecompositionRow> {
    enumerate_partitions(n)
        .iter()
        .filter(|l| l.len() <= m)
        .map(|l| {
            let (sn_dim, um_dim) = (sn_irrep_dim(l), um_irrep_dim(l, m));
            DecompositionRow { partition: l.clone(), sn_dim, um_dim, product: sn_dim * um_dim }
        })
        .collect()
}

/// Partition function of a subspace with a diagonal single-particle energy.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspacePartitionFunction {
    /// Polynomial in one variable per energy label.
    pub polynomial: Polynomial,
    pub monomial: Option<SymPoly>,
    pub schur: Option<SymPoly>,
}

/// `Z = sum over basis vectors of prod_k x_{energy[i_k - 1]}`.
///
/// `energy[l]` is the 0-based variable carrying the energy of level `l+1`;
/// equal labels declare degenerate levels. Each basis vector has to be an
/// eigenvector of the total energy.
pub fn subspace_partition_function<F: Field>(basis: &SubspaceBasis<F>, energy: &[usize]) -> Result<SubspacePartitionFunction, TensorError> {
    let nvars = energy.iter().max().map_or(0, |v| v + 1);
    let mut poly = Polynomial::zero(nvars);
    let mut n = 0;
    for (idx, v) in basis.vectors.iter().enumerate() {
        if energy.len() != v.m {
            return Err(TensorError::Shape);
        }
        n = v.n;
        let mut exps: Option<Vec<usize>> = None;
        for (ket, _) in v.terms() {
            let mut e = vec![0; nvars];
            for &l in ket {
                e[energy[l - 1]] += 1;
            }
            match &exps {
                Some(prev) if *prev != e => return Err(TensorError::NotEnergyEigenbasis(idx + 1)),
                _ => exps = Some(e),
            }
        }
        if let Some(e) = exps {
            poly.add_term(e, Rational::one());
        }
    }
    let monomial = poly.to_monomial_basis(n);
    let schur = monomial.as_ref().map(|p| convert_basis(p, Basis::Schur));
    Ok(SubspacePartitionFunction { polynomial: poly, monomial, schur })
}

/// Identity matrix of size `m` as a single-particle map.
pub fn identity_map<F: Field>(m: usize) -> Matrix<F> {
    crate::linalg::identity(m)
}
