//! The consistency check between the Schur side (`C`) and the monomial side
//! (`Omega`) of a candidate statistics.
//!
//! `Omega = K C` with `K` the Kostka matrix. A statistics is quantum
//! mechanically sound when every `C^I` is a non-negative integer and
//! statistically sound when every `Omega^J` is 0 or 1.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::{int, Rational};
use crate::symfunc::{kostka_matrix, Basis, KostkaTransform, SymPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Coefficients `C^I` of Schur polynomials.
    Schur,
    /// Coefficients `Omega^J` of monomial symmetric functions.
    Monomial,
}

impl Side {
    pub fn basis(self) -> Basis {
        match self {
            Side::Schur => Basis::Schur,
            Side::Monomial => Basis::Monomial,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Schur => "schur",
            Side::Monomial => "monomial",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text.to_ascii_lowercase().as_str() {
            "schur" | "s" | "c" => Some(Side::Schur),
            "monomial" | "m" | "omega" => Some(Side::Monomial),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("expected {expected} coefficients for N={n}, got {got}")]
    Length { n: usize, expected: usize, got: usize },
    #[error("all coefficients are zero")]
    AllZero,
}

/// A candidate statistics for `n` particles on one side of the Kostka map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatisticsSpec {
    pub n: usize,
    pub side: Side,
    /// Length `P(n)`, partition order.
    pub coeffs: Vec<Rational>,
    pub label: String,
}

impl StatisticsSpec {
    pub fn new(n: usize, side: Side, coeffs: Vec<Rational>, label: impl Into<String>) -> Result<Self, SpecError> {
        let spec = Self::empty(n, side, label);
        if coeffs.len() != spec.coeffs.len() {
            return Err(SpecError::Length { n, expected: spec.coeffs.len(), got: coeffs.len() });
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(SpecError::AllZero);
        }
        Ok(Self { coeffs, ..spec })
    }

    /// The all-zero statistics, which must be asked for explicitly.
    pub fn empty(n: usize, side: Side, label: impl Into<String>) -> Self {
        let len = enumerate_partitions(n).len();
        Self { n, side, coeffs: alloc::vec![Rational::zero(); len], label: label.into() }
    }

    /// Indicator vector `e_J` (1-based).
    pub fn unit(n: usize, side: Side, j: usize, label: impl Into<String>) -> Self {
        let mut spec = Self::empty(n, side, label);
        spec.coeffs[j - 1] = Rational::one();
        spec
    }

    pub fn from_sympoly(p: &SymPoly, label: impl Into<String>) -> Self {
        let side = match p.basis() {
            Basis::Schur => Side::Schur,
            Basis::Monomial => Side::Monomial,
        };
        Self { n: p.degree(), side, coeffs: p.to_vector(), label: label.into() }
    }

    pub fn to_sympoly(&self) -> SymPoly {
        SymPoly::from_vector(self.n, self.side.basis(), &self.coeffs)
    }

    /// The same statistics expressed on `side`.
    pub fn on_side(&self, side: Side, transform: &KostkaTransform) -> Self {
        assert_eq!(transform.n(), self.n, "transform built for a different N");
        let coeffs = match (self.side, side) {
            (a, b) if a == b => self.coeffs.clone(),
            (Side::Schur, Side::Monomial) => transform.to_monomial(&self.coeffs),
            _ => transform.to_schur(&self.coeffs),
        };
        Self { n: self.n, side, coeffs, label: self.label.clone() }
    }
}

/// `Omega = K C`. A spec already on the monomial side is returned unchanged.
pub fn omega_from_c(spec: &StatisticsSpec) -> StatisticsSpec {
    spec.on_side(Side::Monomial, &KostkaTransform::new(spec.n))
}

/// `C = K^-1 Omega`. A spec already on the Schur side is returned unchanged.
pub fn c_from_omega(spec: &StatisticsSpec) -> StatisticsSpec {
    spec.on_side(Side::Schur, &KostkaTransform::new(spec.n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    NegativeC,
    NonIntegerC,
    OmegaGtOne,
    FractionalOmega,
    NegativeOmega,
}

impl ViolationKind {
    pub const ALL: [ViolationKind; 5] = [
        ViolationKind::NegativeC,
        ViolationKind::NonIntegerC,
        ViolationKind::OmegaGtOne,
        ViolationKind::FractionalOmega,
        ViolationKind::NegativeOmega,
    ];

    pub fn code(self) -> &'static str {
        match self {
            ViolationKind::NegativeC => "NEGATIVE_C",
            ViolationKind::NonIntegerC => "NON_INTEGER_C",
            ViolationKind::OmegaGtOne => "OMEGA_GT_ONE",
            ViolationKind::FractionalOmega => "FRACTIONAL_OMEGA",
            ViolationKind::NegativeOmega => "NEGATIVE_OMEGA",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.code() == code)
    }

    /// What a violation of this kind says physically.
    pub fn interpretation(self) -> &'static str {
        match self {
            ViolationKind::NegativeC => "C<0: breakdown of basis independence (U(m) invariance)",
            ViolationKind::NonIntegerC => "non-integer C: not a multiplicity of U(m) irreps",
            ViolationKind::OmegaGtOne => "Omega>1: breakdown of particle indistinguishability",
            ViolationKind::FractionalOmega => "fractional Omega: statistical weight, not a microstate count",
            ViolationKind::NegativeOmega => "Omega<0: negative microstate weight",
        }
    }

    pub fn is_schur_side(self) -> bool {
        matches!(self, ViolationKind::NegativeC | ViolationKind::NonIntegerC)
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub partition: Partition,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditVerdict {
    pub label: String,
    pub n: usize,
    pub input_side: Side,
    pub qm_ok: bool,
    pub sm_ok: bool,
    pub qs_ok: bool,
    pub violations: Vec<Violation>,
    pub c: Vec<Rational>,
    pub omega: Vec<Rational>,
}

impl AuditVerdict {
    /// Distinct violation kinds in a fixed order.
    pub fn kinds(&self) -> BTreeSet<ViolationKind> {
        self.violations.iter().map(|v| v.kind).collect()
    }
}

pub fn classify(spec: &StatisticsSpec) -> AuditVerdict {
    classify_with(spec, &KostkaTransform::new(spec.n))
}

/// [`classify`] with a prebuilt transform for the same `N`.
pub fn classify_with(spec: &StatisticsSpec, transform: &KostkaTransform) -> AuditVerdict {
    let c = spec.on_side(Side::Schur, transform).coeffs;
    let omega = spec.on_side(Side::Monomial, transform).coeffs;
    let table = &transform.table;
    let mut violations = Vec::new();
    let mut push = |kind, j: usize, value: &Rational| {
        violations.push(Violation { kind, partition: table.get(j + 1).clone(), value: value.clone() });
    };
    for (i, value) in c.iter().enumerate() {
        if value.is_negative() {
            push(ViolationKind::NegativeC, i, value);
        }
        if !value.is_integer() {
            push(ViolationKind::NonIntegerC, i, value);
        }
    }
    for (j, value) in omega.iter().enumerate() {
        if value > &Rational::one() {
            push(ViolationKind::OmegaGtOne, j, value);
        }
        if !value.is_integer() {
            push(ViolationKind::FractionalOmega, j, value);
        }
        if value.is_negative() {
            push(ViolationKind::NegativeOmega, j, value);
        }
    }
    let qm_ok = !violations.iter().any(|v| v.kind.is_schur_side());
    let sm_ok = violations.iter().all(|v| v.kind.is_schur_side());
    AuditVerdict {
        label: spec.label.clone(),
        n: spec.n,
        input_side: spec.side,
        qm_ok,
        sm_ok,
        qs_ok: qm_ok && sm_ok,
        violations,
        c,
        omega,
    }
}

/// 1-based columns `L` of the Kostka matrix whose entries are all 0 or 1, i.e.
/// the single irreps `C = e_L` that also pass the monomial-side test.
pub fn admissible_columns(n: usize) -> BTreeSet<usize> {
    let k = kostka_matrix(n);
    (1..=k.size())
        .filter(|&i| (1..=k.size()).all(|j| k.get(j, i) <= 1))
        .collect()
}

/// Result of trying every nonzero 0/1 vector `C` for one `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryScan {
    pub n: usize,
    pub checked: usize,
    /// Passing vectors, as 1-based support sets.
    pub passing: Vec<Vec<usize>>,
}

/// Classifies every `C in {0,1}^{P(n)} \ {0}`.
pub fn binary_scan(n: usize) -> BinaryScan {
    let transform = KostkaTransform::new(n);
    let len = transform.table.len();
    assert!(len < 32, "binary scan limited to P(n) < 32");
    let mut passing = Vec::new();
    let mut checked = 0;
    for mask in 1u32..(1 << len) {
        let support: Vec<usize> = (0..len).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let mut spec = StatisticsSpec::empty(n, Side::Schur, "");
        for &i in &support {
            spec.coeffs[i - 1] = int(1);
        }
        checked += 1;
        if classify_with(&spec, &transform).qs_ok {
            passing.push(support);
        }
    }
    BinaryScan { n, checked, passing }
}
