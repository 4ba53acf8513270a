//! Model descriptor files for the second-quantised models.
//!
//! ```json
//! {"kind": "gentile-cos", "q": 2, "sites": 3, "N": 2, "s": 1,
//!  "hamiltonian": {"hopping": [[1, 2, 1.0], [2, 3, 1.4]]}}
//! ```
//!
//! Diagonal models report the spectrum, the exact partition function and the
//! fitted statistics. Hopping models report the spectrum and a freeness check.

use serde::{Deserialize, Serialize};
use num_traits::Signed;
use statcheck_core::fock::{
    build_basis, build_hamiltonian, eigenvalues_symmetric, fit_statistics, freeness_check, symbolic_partition_function,
    AlgebraKind, FockError, HamiltonianSpec, VariableMap, DEFAULT_EIGEN_TOL, DEFAULT_FREENESS_TOL,
};
use statcheck_core::symfunc::Locus;
use statcheck_core::{Rational, Side, StatisticsSpec};

use crate::report::{rational_strings, round_all, round_sig, VerdictRecord};

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDescriptor {
    pub kind: String,
    pub q: Option<usize>,
    pub m: Option<usize>,
    pub sites: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub s: Option<i8>,
    pub hamiltonian: HamiltonianEntry,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum HamiltonianEntry {
    Diagonal(Vec<f64>),
    Hopping(Vec<(usize, usize, f64)>),
}

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("{0}")]
    Descriptor(String),
    #[error(transparent)]
    Fock(#[from] FockError),
}

impl ModelDescriptor {
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let inner = e.inner();
            ModelError::Descriptor(format!("line {}, column {}: {}: {}", inner.line(), inner.column(), e.path(), inner))
        })
    }

    pub fn algebra(&self) -> Result<AlgebraKind, ModelError> {
        let bad = |m: &str| ModelError::Descriptor(m.to_string());
        let kind = self.kind.to_ascii_lowercase().replace('_', "-");
        let s = self.s.unwrap_or(1);
        let alg = match kind.as_str() {
            "gentile-cos" | "gentile" => AlgebraKind::GentileCos { q: self.q.ok_or_else(|| bad("kind gentile-cos needs q"))?, s },
            "bm-sin" | "bm" => AlgebraKind::BmSin { q: self.q.ok_or_else(|| bad("kind bm-sin needs q"))?, s },
            "wang-rmatrix" | "wang" => AlgebraKind::WangRMatrix { flavors: self.m.ok_or_else(|| bad("kind wang-rmatrix needs m"))? },
            "boson" => AlgebraKind::Boson,
            other => return Err(ModelError::Descriptor(format!("unknown kind {other:?} (gentile-cos, bm-sin, wang-rmatrix, boson)"))),
        };
        let uses_q = matches!(alg, AlgebraKind::GentileCos { .. } | AlgebraKind::BmSin { .. });
        if self.q.is_some() && !uses_q {
            return Err(bad("q only applies to gentile-cos and bm-sin"));
        }
        if self.m.is_some() && !matches!(alg, AlgebraKind::WangRMatrix { .. }) {
            return Err(bad("m only applies to wang-rmatrix"));
        }
        if self.s.is_some() && !uses_q {
            return Err(bad("s only applies to gentile-cos and bm-sin"));
        }
        alg.validate()?;
        Ok(alg)
    }

    pub fn hamiltonian(&self) -> HamiltonianSpec {
        match &self.hamiltonian {
            HamiltonianEntry::Diagonal(eps) => HamiltonianSpec::Diagonal(eps.clone()),
            HamiltonianEntry::Hopping(h) => HamiltonianSpec::Hopping(h.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionFunctionRecord {
    pub polynomial: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitRecord {
    /// Sites used for the fit; at least `N` so that every partition is visible.
    pub fit_sites: usize,
    pub schur: String,
    pub monomial: String,
    pub verdict: VerdictRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FreenessRecord {
    pub free: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub greedy: bool,
    pub single_particle: Vec<f64>,
    pub candidates: Vec<f64>,
    pub rule: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModelReport {
    pub model: String,
    pub sites: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub spectrum: Vec<f64>,
    pub trace: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition_function: Option<PartitionFunctionRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fit: Option<FitRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub freeness: Option<FreenessRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn fit_locus(alg: &AlgebraKind, sites: usize) -> Locus {
    match *alg {
        AlgebraKind::WangRMatrix { flavors } => Locus::blocks(&vec![flavors; sites]),
        _ => Locus::free(sites),
    }
}

/// Annotates a negative `Omega_(N)`: its sign is fixed by `Omega = K C`, so a
/// positive coefficient of `m_(N)` cannot accompany the fitted `C`.
fn sign_note(omega: &StatisticsSpec) -> Option<String> {
    let first: &Rational = omega.coeffs.first()?;
    if !first.is_negative() {
        return None;
    }
    Some(format!(
        "sign check: Omega = K C gives {first} for m_({}); an expansion quoting +{} here is inconsistent with C",
        omega.n,
        -first
    ))
}

pub fn run_model(desc: &ModelDescriptor) -> Result<ModelReport, ModelError> {
    let alg = desc.algebra()?;
    let basis = build_basis(&alg, desc.sites, desc.n)?;
    let spec = desc.hamiltonian();
    let op = build_hamiltonian(&alg, &basis, &spec)?;
    let spectrum = eigenvalues_symmetric(&op, DEFAULT_EIGEN_TOL).map_err(FockError::from)?;
    let mut report = ModelReport {
        model: alg.label(),
        sites: desc.sites,
        n: desc.n,
        dimension: basis.len(),
        basis: basis.iter().map(ToString::to_string).collect(),
        spectrum: round_all(&spectrum),
        trace: round_sig(op.trace()),
        partition_function: None,
        fit: None,
        freeness: None,
        notes: Vec::new(),
    };
    match &desc.hamiltonian {
        HamiltonianEntry::Diagonal(_) => {
            let pf = symbolic_partition_function(&alg, desc.sites, desc.n, &VariableMap::identity(alg.orbitals(desc.sites)))?;
            report.partition_function = Some(PartitionFunctionRecord {
                polynomial: pf.polynomial.to_string(),
                monomial: pf.monomial.as_ref().map(ToString::to_string),
            });
            let fit_sites = desc.sites.max(desc.n);
            let fit = fit_statistics(&alg, desc.n, &fit_locus(&alg, fit_sites))?;
            let omega = StatisticsSpec { n: desc.n, side: Side::Monomial, coeffs: fit.verdict.omega.clone(), label: String::new() };
            if matches!(alg, AlgebraKind::WangRMatrix { .. }) {
                report.notes.extend(sign_note(&omega));
            }
            let mut verdict = VerdictRecord::new(&alg.label(), &fit.verdict);
            verdict.notes = fit.verdict.kinds().into_iter().map(|k| format!("{}: {}", k.code(), k.interpretation())).collect();
            report.fit = Some(FitRecord {
                fit_sites,
                schur: fit.spec.to_sympoly().to_string(),
                monomial: omega.to_sympoly().to_string(),
                verdict,
            });
            debug_assert_eq!(rational_strings(&fit.spec.coeffs), report.fit.as_ref().unwrap().verdict.c);
        }
        HamiltonianEntry::Hopping(hops) => {
            let fr = freeness_check(&alg, desc.sites, hops, desc.n, DEFAULT_FREENESS_TOL)?;
            let rule = match alg {
                AlgebraKind::WangRMatrix { flavors } => format!("at most one particle per orbital, {flavors} flavours per level"),
                AlgebraKind::Boson => String::from("no occupancy cap"),
                _ => format!("at most {} particles per orbital", alg.site_cap(desc.n)),
            };
            if fr.greedy {
                report.notes.push(format!(
                    "candidate list ({}) and spectrum ({}) differ in size; values were paired greedily",
                    fr.candidates.len(),
                    fr.spectrum.len()
                ));
            }
            report.notes.push(String::from("freeness candidates follow an occupancy-cap heuristic"));
            report.freeness = Some(FreenessRecord {
                free: fr.free,
                max_deviation: round_sig(fr.max_deviation),
                tolerance: DEFAULT_FREENESS_TOL,
                greedy: fr.greedy,
                single_particle: round_all(&fr.single_particle),
                candidates: round_all(&fr.candidates),
                rule,
            });
        }
    }
    Ok(report)
}
