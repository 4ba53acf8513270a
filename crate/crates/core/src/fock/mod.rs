//! Second-quantized models on a handful of sites.
//!
//! Three deformed algebras are supported: the Gentile oscillator (cosine
//! bracket), the Biedenharn–Macfarlane oscillator (sine bracket) and the
//! R-matrix parastatistics model with `m` internal flavours. An uncapped
//! boson serves as the free reference. Modes are ordered by ascending site
//! index for every sign string.

mod analysis;
mod eigen;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_traits::Float;

pub use analysis::{
    antisymmetric_reference_hamiltonian, fit_statistics, freeness_check, symbolic_partition_function,
    thermal_partition_function, FockFit, FreenessReport, PartitionFunction, VariableMap,
    DEFAULT_FREENESS_TOL,
};
pub use eigen::{
    eigen_symmetric, eigenvalues_symmetric, EigenDecomposition, EigenError, ManyBodyOperator,
    DEFAULT_EIGEN_TOL, MAX_SWEEPS, SYMMETRY_TOL,
};

use crate::symfunc::FitError;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum FockError {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(&'static str),
    #[error("a model needs at least one site")]
    NoSites,
    #[error("no state with {n} particles fits on {sites} sites")]
    EmptySector { sites: usize, n: usize },
    #[error("site {site} out of range 1..={sites}")]
    BadSite { site: usize, sites: usize },
    #[error("hopping from site {0} to itself")]
    SelfHop(usize),
    #[error("expected {expected} site energies, got {got}")]
    DiagonalLength { expected: usize, got: usize },
    #[error("assembled Hamiltonian is not symmetric (max |H - H^T| = {0:e})")]
    Asymmetric(f64),
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error("locus must tie all {flavors} flavours of each site to one variable")]
    FlavorLocus { flavors: usize },
    #[error("{vars} variables do not split into sites of {flavors} flavours")]
    FlavorCount { vars: usize, flavors: usize },
    #[error("variable map covers {got} orbitals, model has {expected}")]
    MapLength { expected: usize, got: usize },
}

/// Which ladder bracket a deformed oscillator uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deformation {
    Cos,
    Sin,
}

/// Ladder amplitude factor `[n]` for maximal occupation `q`.
///
/// `Cos` is `sum_{j<n} cos^j(theta) cos((n-1-j) theta)`, `Sin` is
/// `sin(n theta) / sin(theta)`, both with `theta = pi / (q+1)`.
pub fn bracket(kind: Deformation, n: usize, q: usize) -> f64 {
    let theta = PI / (q as f64 + 1.0);
    match kind {
        Deformation::Cos => {
            let c = Float::cos(theta);
            (0..n).map(|j| Float::powi(c, j as i32) * Float::cos((n - 1 - j) as f64 * theta)).sum()
        }
        Deformation::Sin => Float::sin(n as f64 * theta) / Float::sin(theta),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// Gentile oscillator with cap `q` and inter-mode sign `s = ±1`.
    GentileCos { q: usize, s: i8 },
    /// Biedenharn–Macfarlane oscillator with cap `q` and inter-mode sign `s = ±1`.
    BmSin { q: usize, s: i8 },
    /// R-matrix parastatistics with `flavors` internal states, at most one particle per site.
    WangRMatrix { flavors: usize },
    /// Ordinary bosons with no occupancy cap.
    Boson,
}

impl AlgebraKind {
    pub fn validate(&self) -> Result<(), FockError> {
        match *self {
            Self::GentileCos { q, s } | Self::BmSin { q, s } => {
                if q == 0 {
                    return Err(FockError::InvalidAlgebra("q must be at least 1"));
                }
                if s != 1 && s != -1 {
                    return Err(FockError::InvalidAlgebra("inter-mode sign must be +1 or -1"));
                }
                Ok(())
            }
            Self::WangRMatrix { flavors: 0 } => Err(FockError::InvalidAlgebra("need at least one flavour")),
            _ => Ok(()),
        }
    }

    /// Largest occupancy of a single site with `n` particles in total.
    pub fn site_cap(&self, n: usize) -> usize {
        match *self {
            Self::GentileCos { q, .. } | Self::BmSin { q, .. } => q,
            Self::WangRMatrix { .. } => 1,
            Self::Boson => n,
        }
    }

    /// Single-particle orbitals seen by a variable map: sites, or sites times flavours.
    pub fn orbitals(&self, sites: usize) -> usize {
        match *self {
            Self::WangRMatrix { flavors } => sites * flavors,
            _ => sites,
        }
    }

    pub fn flavors(&self) -> usize {
        match *self {
            Self::WangRMatrix { flavors } => flavors,
            _ => 1,
        }
    }

    /// `[n]` for this algebra; `n` itself for bosons.
    pub fn bracket(&self, n: usize) -> f64 {
        match *self {
            Self::GentileCos { q, .. } => bracket(Deformation::Cos, n, q),
            Self::BmSin { q, .. } => bracket(Deformation::Sin, n, q),
            Self::WangRMatrix { .. } => (n <= 1) as u8 as f64,
            Self::Boson => n as f64,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Self::GentileCos { q, s } => alloc::format!("gentile-cos q={q} s={s}"),
            Self::BmSin { q, s } => alloc::format!("bm-sin q={q} s={s}"),
            Self::WangRMatrix { flavors } => alloc::format!("wang-rmatrix m={flavors}"),
            Self::Boson => "boson".to_string(),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// One basis ket.
///
/// `Occupation` holds `n_i` per site. `Flavored` holds the content of each
/// site: `0` for empty, `a` for a particle of flavour `a`. The flavour word of
/// a flavoured ket is read off in site order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FockBasisState {
    Occupation(Vec<usize>),
    Flavored(Vec<usize>),
}

impl FockBasisState {
    pub fn sites(&self) -> usize {
        self.raw().len()
    }

    pub fn occupancy(&self, site: usize) -> usize {
        match self {
            Self::Occupation(n) => n[site],
            Self::Flavored(c) => (c[site] != 0) as usize,
        }
    }

    pub fn particles(&self) -> usize {
        (0..self.sites()).map(|i| self.occupancy(i)).sum()
    }

    pub fn raw(&self) -> &[usize] {
        match self {
            Self::Occupation(v) | Self::Flavored(v) => v,
        }
    }
}

impl fmt::Display for FockBasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for (i, x) in self.raw().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(">")
    }
}

/// All vectors of length `len` with entries in `0..=cap` summing to `total`,
/// in descending lexicographic order.
fn capped_compositions(len: usize, total: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, total: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let left = len - prefix.len() - 1;
        for k in (0..=cap.min(total)).rev() {
            if (total - k) > left * cap {
                continue;
            }
            prefix.push(k);
            go(len, total - k, cap, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, total, cap, &mut Vec::new(), &mut out);
    out
}

/// Basis of the `n`-particle sector on `sites` sites, descending lexicographic
/// in the per-site vector.
pub fn build_basis(alg: &AlgebraKind, sites: usize, n: usize) -> Result<Vec<FockBasisState>, FockError> {
    alg.validate()?;
    if sites == 0 {
        return Err(FockError::NoSites);
    }
    let states: Vec<FockBasisState> = match *alg {
        AlgebraKind::WangRMatrix { flavors } => {
            let mut out = Vec::new();
            for occ in capped_compositions(sites, n, 1) {
                // every flavour word over the occupied sites, descending
                let occupied: Vec<usize> = (0..sites).filter(|&i| occ[i] == 1).collect();
                let mut word = vec![flavors; n];
                loop {
                    let mut content = vec![0; sites];
                    for (&site, &a) in occupied.iter().zip(&word) {
                        content[site] = a;
                    }
                    out.push(FockBasisState::Flavored(content));
                    let Some(pos) = word.iter().rposition(|&a| a > 1) else { break };
                    word[pos] -= 1;
                    for a in &mut word[pos + 1..] {
                        *a = flavors;
                    }
                }
            }
            out.sort_unstable_by(|a, b| b.cmp(a));
            out
        }
        _ => capped_compositions(sites, n, alg.site_cap(n)).into_iter().map(FockBasisState::Occupation).collect(),
    };
    if states.is_empty() {
        return Err(FockError::EmptySector { sites, n });
    }
    Ok(states)
}

/// Single-particle part of a Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub enum HamiltonianSpec {
    /// One energy per site: `H = sum_i eps_i n_i`.
    Diagonal(Vec<f64>),
    /// Entries `(i, j, t_ij)` with 1-based sites: `H = -sum_{i != j} t_ij a_i^dag a_j`.
    /// A missing mirror entry `(j, i)` is taken equal to `t_ij`.
    Hopping(Vec<(usize, usize, f64)>),
}

/// Full `sites x sites` hopping matrix `t`, mirrored where only one direction is given.
pub fn hopping_matrix(sites: usize, hops: &[(usize, usize, f64)]) -> Result<Vec<Vec<f64>>, FockError> {
    let mut given: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for &(i, j, t) in hops {
        for site in [i, j] {
            if site == 0 || site > sites {
                return Err(FockError::BadSite { site, sites });
            }
        }
        if i == j {
            return Err(FockError::SelfHop(i));
        }
        *given.entry((i - 1, j - 1)).or_insert(0.0) += t;
    }
    let mut t = vec![vec![0.0; sites]; sites];
    for (&(i, j), &v) in &given {
        t[i][j] = v;
        if !given.contains_key(&(j, i)) {
            t[j][i] = v;
        }
    }
    Ok(t)
}

/// Coefficient and target of `a_x^dag a_y` (0-based, `x != y`) on a ket.
fn hop_action(alg: &AlgebraKind, state: &FockBasisState, x: usize, y: usize, n: usize) -> Option<(f64, FockBasisState)> {
    match (alg, state) {
        (AlgebraKind::WangRMatrix { .. }, FockBasisState::Flavored(content)) => {
            if content[y] == 0 || content[x] != 0 {
                return None;
            }
            // the flavour word stays in site order; only the occupied set moves
            let word: Vec<usize> = content.iter().copied().filter(|&a| a != 0).collect();
            let below_y = content[..y].iter().filter(|&&a| a != 0).count();
            let mut occupied: Vec<usize> = (0..content.len()).filter(|&i| content[i] != 0 && i != y).collect();
            let below_x = occupied.iter().filter(|&&i| i < x).count();
            occupied.push(x);
            occupied.sort_unstable();
            let mut next = vec![0; content.len()];
            for (&site, a) in occupied.iter().zip(word) {
                next[site] = a;
            }
            let sign = if (below_x + below_y) % 2 == 0 { 1.0 } else { -1.0 };
            Some((sign, FockBasisState::Flavored(next)))
        }
        (_, FockBasisState::Occupation(occ)) => {
            let cap = alg.site_cap(n);
            if occ[y] == 0 || occ[x] + 1 > cap {
                return None;
            }
            let amp = Float::sqrt(alg.bracket(occ[x] + 1) * alg.bracket(occ[y]));
            let before = |k: usize| occ[..k].iter().sum::<usize>() as i64;
            let (sx, sy) = (before(x), before(y));
            let exponent = match *alg {
                AlgebraKind::GentileCos { .. } if x < y => sy - sx,
                AlgebraKind::BmSin { .. } if x < y => sx + sy,
                _ => 1 - sx + sy,
            };
            let s = match *alg {
                AlgebraKind::GentileCos { s, .. } | AlgebraKind::BmSin { s, .. } => s,
                _ => 1,
            };
            let sign = if s == -1 && exponent.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
            let mut next = occ.clone();
            next[x] += 1;
            next[y] -= 1;
            Some((sign * amp, FockBasisState::Occupation(next)))
        }
        _ => None,
    }
}

/// Dense Hamiltonian in the given basis.
pub fn build_hamiltonian(alg: &AlgebraKind, basis: &[FockBasisState], spec: &HamiltonianSpec) -> Result<ManyBodyOperator, FockError> {
    alg.validate()?;
    let Some(first) = basis.first() else {
        return Ok(ManyBodyOperator::zeros(0));
    };
    let sites = first.sites();
    let n = first.particles();
    let dim = basis.len();
    let mut h = vec![vec![0.0; dim]; dim];
    match spec {
        HamiltonianSpec::Diagonal(eps) => {
            if eps.len() != sites {
                return Err(FockError::DiagonalLength { expected: sites, got: eps.len() });
            }
            for (k, state) in basis.iter().enumerate() {
                h[k][k] = (0..sites).map(|i| eps[i] * state.occupancy(i) as f64).sum();
            }
        }
        HamiltonianSpec::Hopping(hops) => {
            let t = hopping_matrix(sites, hops)?;
            let index: BTreeMap<&FockBasisState, usize> = basis.iter().enumerate().map(|(k, s)| (s, k)).collect();
            for (col, state) in basis.iter().enumerate() {
                for x in 0..sites {
                    for y in 0..sites {
                        if x == y || t[x][y] == 0.0 {
                            continue;
                        }
                        if let Some((amp, target)) = hop_action(alg, state, x, y, n) {
                            let row = *index.get(&target).expect("hopping stays in the sector");
                            h[row][col] -= t[x][y] * amp;
                        }
                    }
                }
            }
        }
    }
    let op = ManyBodyOperator::new(h)?;
    if !op.symmetric {
        return Err(FockError::Asymmetric(op.asymmetry()));
    }
    Ok(op)
}

#[cfg(test)]
mod tests;
