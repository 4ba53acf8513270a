use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Float, One};

use super::{build_basis, build_hamiltonian, capped_compositions, eigenvalues_symmetric, hopping_matrix, AlgebraKind, FockBasisState, FockError, HamiltonianSpec, ManyBodyOperator, DEFAULT_EIGEN_TOL};
use crate::partitions::signed_permutations;
use crate::audit::{classify, AuditVerdict, StatisticsSpec};
use crate::scalar::Rational;
use crate::symfunc::{fit_coefficients, Basis, FitReport, Locus, Polynomial, SymPoly};

/// Default largest allowed deviation between the many-body spectrum and the
/// free-particle candidates.
pub const DEFAULT_FREENESS_TOL: f64 = 1e-8;

/// Assignment of single-particle orbitals to polynomial variables.
///
/// Orbitals are sites, except for the R-matrix model where orbital
/// `(i, a)` has index `i * m + (a - 1)`. Mapping several orbitals to one
/// variable declares them degenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableMap {
    targets: Vec<usize>,
    nvars: usize,
}

impl VariableMap {
    pub fn identity(orbitals: usize) -> Self {
        Self { targets: (0..orbitals).collect(), nvars: orbitals }
    }

    /// `targets[k]` is the 0-based variable of orbital `k`.
    pub fn new(targets: Vec<usize>) -> Self {
        let nvars = targets.iter().max().map_or(0, |v| v + 1);
        Self { targets, nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }
}

/// Canonical partition function of a diagonal Hamiltonian, `x_k = exp(-beta eps_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionFunction {
    pub polynomial: Polynomial,
    /// Monomial expansion, when the polynomial is symmetric in its variables.
    pub monomial: Option<SymPoly>,
}

impl PartitionFunction {
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.polynomial.evaluate(point)
    }
}

/// `Z = sum over basis states of prod_k x_{map(k)}^{n_k}`.
pub fn symbolic_partition_function(alg: &AlgebraKind, sites: usize, n: usize, map: &VariableMap) -> Result<PartitionFunction, FockError> {
    let expected = alg.orbitals(sites);
    if map.targets.len() != expected {
        return Err(FockError::MapLength { expected, got: map.targets.len() });
    }
    let m = alg.flavors();
    let mut poly = Polynomial::zero(map.nvars);
    for state in build_basis(alg, sites, n)? {
        let mut exps = vec![0; map.nvars];
        match &state {
            FockBasisState::Occupation(occ) => {
                for (i, &k) in occ.iter().enumerate() {
                    exps[map.targets[i]] += k;
                }
            }
            FockBasisState::Flavored(content) => {
                for (i, &a) in content.iter().enumerate().filter(|(_, &a)| a != 0) {
                    exps[map.targets[i * m + a - 1]] += 1;
                }
            }
        }
        poly.add_term(exps, Rational::one());
    }
    let monomial = poly.to_monomial_basis(n);
    Ok(PartitionFunction { polynomial: poly, monomial })
}

/// `sum_k exp(-beta E_k)` over a spectrum.
pub fn thermal_partition_function(energies: &[f64], beta: f64) -> f64 {
    energies.iter().map(|e| Float::exp(-beta * e)).sum()
}

/// Statistics recovered from a model's partition function.
#[derive(Clone, Debug, PartialEq)]
pub struct FockFit {
    pub fit: FitReport,
    /// Schur-side coefficients.
    pub spec: StatisticsSpec,
    pub verdict: AuditVerdict,
}

/// Fits the `n`-particle partition function on `locus` in the Schur basis and
/// audits the result. The locus covers every orbital; for the R-matrix model
/// it must tie the flavours of each site together.
pub fn fit_statistics(alg: &AlgebraKind, n: usize, locus: &Locus) -> Result<FockFit, FockError> {
    alg.validate()?;
    let m = alg.flavors();
    let vars = locus.m_vars();
    if !vars.is_multiple_of(m) {
        return Err(FockError::FlavorCount { vars, flavors: m });
    }
    if locus.assignment().chunks(m).any(|site| site.iter().any(|g| *g != site[0])) {
        return Err(FockError::FlavorLocus { flavors: m });
    }
    let pf = symbolic_partition_function(alg, vars / m, n, &VariableMap::identity(vars))?;
    let fit = fit_coefficients(|x: &[Rational]| pf.evaluate(x), n, locus, Basis::Schur)?;
    let spec = StatisticsSpec::from_sympoly(&fit.coeffs, format!("{alg} N={n}"));
    let verdict = classify(&spec);
    Ok(FockFit { fit, spec, verdict })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FreenessReport {
    pub free: bool,
    pub max_deviation: f64,
    /// Sorted exact many-body spectrum.
    pub spectrum: Vec<f64>,
    /// Sorted sums of single-particle levels allowed by the occupancy rule.
    pub candidates: Vec<f64>,
    pub single_particle: Vec<f64>,
    /// Set when the two lists differ in size and were matched greedily.
    pub greedy: bool,
}

/// Compares the many-body spectrum of a hopping model with the energies of
/// free particles filling its single-particle levels.
///
/// Occupancy rules: at most `q` per level for the deformed oscillators, no
/// limit for bosons, and for the R-matrix model `m` flavoured copies of each
/// level, each holding at most one particle. That last rule is a heuristic.
pub fn freeness_check(alg: &AlgebraKind, sites: usize, hops: &[(usize, usize, f64)], n: usize, tol: f64) -> Result<FreenessReport, FockError> {
    let basis = build_basis(alg, sites, n)?;
    let h = build_hamiltonian(alg, &basis, &HamiltonianSpec::Hopping(hops.to_vec()))?;
    let spectrum = eigenvalues_symmetric(&h, DEFAULT_EIGEN_TOL)?;
    let t = hopping_matrix(sites, hops)?;
    let single = ManyBodyOperator::new(t.iter().map(|row| row.iter().map(|x| -x).collect()).collect())?;
    let single_particle = eigenvalues_symmetric(&single, DEFAULT_EIGEN_TOL)?;
    let (levels, cap): (Vec<f64>, usize) = match *alg {
        AlgebraKind::WangRMatrix { flavors } => (single_particle.iter().flat_map(|&e| core::iter::repeat_n(e, flavors)).collect(), 1),
        _ => (single_particle.clone(), alg.site_cap(n)),
    };
    let mut candidates: Vec<f64> = capped_compositions(levels.len(), n, cap)
        .iter()
        .map(|occ| occ.iter().zip(&levels).map(|(&k, e)| k as f64 * e).sum())
        .collect();
    candidates.sort_by(f64::total_cmp);
    let greedy = candidates.len() != spectrum.len();
    let max_deviation = if greedy {
        let mut used = vec![false; candidates.len()];
        let mut worst: f64 = 0.0;
        for e in &spectrum {
            let best = (0..candidates.len()).filter(|&k| !used[k]).min_by(|&a, &b| Float::abs(candidates[a] - e).total_cmp(&Float::abs(candidates[b] - e)));
            match best {
                Some(k) => {
                    used[k] = true;
                    worst = worst.max(Float::abs(candidates[k] - e));
                }
                None => worst = f64::INFINITY,
            }
        }
        worst
    } else {
        spectrum.iter().zip(&candidates).map(|(a, b)| Float::abs(a - b)).fold(0.0, f64::max)
    };
    Ok(FreenessReport { free: max_deviation <= tol, max_deviation, spectrum, candidates, single_particle, greedy })
}

/// Hopping Hamiltonian of `n` spinless fermions built from explicit
/// antisymmetrized tensors in `(R^sites)^{(x) n}` and projected onto Slater
/// determinants, ordered like the `q = 1` occupation basis.
pub fn antisymmetric_reference_hamiltonian(sites: usize, hops: &[(usize, usize, f64)], n: usize) -> Result<ManyBodyOperator, FockError> {
    if sites == 0 {
        return Err(FockError::NoSites);
    }
    let t = hopping_matrix(sites, hops)?;
    let subsets: Vec<Vec<usize>> = capped_compositions(sites, n, 1).into_iter().map(|occ| (0..sites).filter(|&i| occ[i] == 1).collect()).collect();
    if subsets.is_empty() {
        return Err(FockError::EmptySector { sites, n });
    }
    let dim = sites.pow(n as u32);
    let encode = |tuple: &[usize]| tuple.iter().fold(0, |acc, &i| acc * sites + i);
    let decode = |mut code: usize| {
        let mut tuple = vec![0; n];
        for slot in tuple.iter_mut().rev() {
            *slot = code % sites;
            code /= sites;
        }
        tuple
    };
    let perms = signed_permutations(n);
    let slater: Vec<Vec<f64>> = subsets
        .iter()
        .map(|s| {
            let mut v = vec![0.0; dim];
            for (p, sign) in &perms {
                let tuple: Vec<usize> = p.iter().map(|&k| s[k]).collect();
                v[encode(&tuple)] += f64::from(*sign);
            }
            v
        })
        .collect();
    let apply = |v: &[f64]| {
        let mut out = vec![0.0; dim];
        for (code, &amp) in v.iter().enumerate() {
            if amp == 0.0 {
                continue;
            }
            let tuple = decode(code);
            for k in 0..n {
                for x in 0..sites {
                    if t[x][tuple[k]] == 0.0 {
                        continue;
                    }
                    let mut moved = tuple.clone();
                    moved[k] = x;
                    out[encode(&moved)] -= t[x][tuple[k]] * amp;
                }
            }
        }
        out
    };
    let norm: f64 = perms.len() as f64;
    let images: Vec<Vec<f64>> = slater.iter().map(|v| apply(v)).collect();
    let matrix = slater.iter().map(|bra| images.iter().map(|img| bra.iter().zip(img).map(|(a, b)| a * b).sum::<f64>() / norm).collect()).collect();
    let op = ManyBodyOperator::new(matrix)?;
    if !op.symmetric {
        return Err(FockError::Asymmetric(op.asymmetry()));
    }
    Ok(op)
}
