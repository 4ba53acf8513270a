//! Coefficient vectors for the statistics families that appear in the
//! literature on generalised exchange statistics.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::audit::{Side, StatisticsSpec};
use crate::partitions::{enumerate_partitions, sn_irrep_dim, Partition};
use crate::scalar::{int, ratio, Rational};
use crate::symfunc::KostkaTransform;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Boson,
    Fermion,
    Gentile,
    Paraboson,
    Parafermion,
    MaxwellBoltzmann,
    Jack21,
    Immanon21,
    SemionN5,
    CappedDistinguishable,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Boson,
        Family::Fermion,
        Family::Gentile,
        Family::Paraboson,
        Family::Parafermion,
        Family::MaxwellBoltzmann,
        Family::Jack21,
        Family::Immanon21,
        Family::SemionN5,
        Family::CappedDistinguishable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Boson => "boson",
            Family::Fermion => "fermion",
            Family::Gentile => "gentile",
            Family::Paraboson => "paraboson",
            Family::Parafermion => "parafermion",
            Family::MaxwellBoltzmann => "maxwell-boltzmann",
            Family::Jack21 => "jack-21",
            Family::Immanon21 => "immanon-21",
            Family::SemionN5 => "semion-n5",
            Family::CappedDistinguishable => "capped-distinguishable",
        }
    }

    /// Accepts the canonical names plus a few aliases (`mb`, `quon`, `jack`, ...).
    pub fn parse(text: &str) -> Option<Self> {
        let t = text.to_ascii_lowercase().replace('_', "-");
        let family = match t.as_str() {
            "boson" => Family::Boson,
            "fermion" => Family::Fermion,
            "gentile" => Family::Gentile,
            "paraboson" | "pb" => Family::Paraboson,
            "parafermion" | "pf" => Family::Parafermion,
            "maxwell-boltzmann" | "mb" | "quon" | "distinguishable" => Family::MaxwellBoltzmann,
            "jack-21" | "jack" => Family::Jack21,
            "immanon-21" | "immanon" => Family::Immanon21,
            "semion-n5" | "semion" => Family::SemionN5,
            "capped-distinguishable" | "capped" | "capped-quon" => Family::CappedDistinguishable,
            _ => return None,
        };
        Some(family)
    }

    /// Side on which the family is defined: occupancy rules give `Omega`,
    /// representation rules give `C`.
    pub fn natural_side(self) -> Side {
        match self {
            Family::Gentile | Family::Jack21 | Family::SemionN5 | Family::CappedDistinguishable => {
                Side::Monomial
            }
            _ => Side::Schur,
        }
    }

    fn needs_q(self) -> bool {
        matches!(
            self,
            Family::Gentile | Family::Paraboson | Family::Parafermion | Family::CappedDistinguishable
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    /// Maximum occupancy (Gentile, capped) or para order `p`.
    pub q_or_p: Option<usize>,
    /// Jack parameter.
    pub alpha: Option<Rational>,
    /// Number of single-particle states; recorded in the label of the capped
    /// family, it does not change the coefficients.
    pub m_states: Option<usize>,
}

impl FamilyParams {
    pub fn new(family: Family, n: usize) -> Self {
        Self { family, n, q_or_p: None, alpha: None, m_states: None }
    }

    pub fn with_q(mut self, q: usize) -> Self {
        self.q_or_p = Some(q);
        self
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_m_states(mut self, m: usize) -> Self {
        self.m_states = Some(m);
        self
    }

    pub fn label(&self) -> String {
        let mut label = String::from(self.family.name());
        if let Some(q) = self.q_or_p {
            let key = match self.family {
                Family::Paraboson | Family::Parafermion => "p",
                _ => "q",
            };
            label += &format!(" {key}={q}");
        }
        if let Some(a) = &self.alpha {
            label += &format!(" alpha={a}");
        }
        if let Some(m) = self.m_states {
            label += &format!(" m={m}");
        }
        label + &format!(" N={}", self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ZooError {
    #[error("{family} is only defined at N={only}, not N={n}")]
    Unsupported { family: Family, n: usize, only: usize },
    #[error("{family} requires parameter {param}")]
    Missing { family: Family, param: &'static str },
    #[error("{family} does not take parameter {param}")]
    Unexpected { family: Family, param: &'static str },
    #[error("parameter {param} must be at least 1")]
    OutOfRange { param: &'static str },
    #[error("particle number must be at least 1")]
    NoParticles,
}

fn check_params(p: &FamilyParams) -> Result<(), ZooError> {
    let family = p.family;
    if p.n == 0 {
        return Err(ZooError::NoParticles);
    }
    match (family.needs_q(), p.q_or_p) {
        (true, None) => return Err(ZooError::Missing { family, param: "q" }),
        (false, Some(_)) => return Err(ZooError::Unexpected { family, param: "q" }),
        (true, Some(0)) => return Err(ZooError::OutOfRange { param: "q" }),
        _ => {}
    }
    match (family == Family::Jack21, &p.alpha) {
        (true, None) => return Err(ZooError::Missing { family, param: "alpha" }),
        (false, Some(_)) => return Err(ZooError::Unexpected { family, param: "alpha" }),
        _ => {}
    }
    if p.m_states.is_some() && family != Family::CappedDistinguishable {
        return Err(ZooError::Unexpected { family, param: "m_states" });
    }
    if p.m_states == Some(0) {
        return Err(ZooError::OutOfRange { param: "m_states" });
    }
    let only = match family {
        Family::SemionN5 => 5,
        Family::Jack21 | Family::Immanon21 => 3,
        _ => return Ok(()),
    };
    if p.n != only {
        return Err(ZooError::Unsupported { family, n: p.n, only });
    }
    Ok(())
}

/// `N! / prod_j lambda_j!`, the number of words with content `lambda`.
pub fn multinomial(lambda: &Partition) -> Rational {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, i| a * i);
    let denom = lambda.parts().iter().fold(BigInt::one(), |a, &p| a * fact(p));
    Rational::new(fact(lambda.weight()), denom)
}

fn indicator(n: usize, keep: impl Fn(&Partition) -> bool) -> Vec<Rational> {
    enumerate_partitions(n)
        .iter()
        .map(|l| if keep(l) { Rational::one() } else { Rational::zero() })
        .collect()
}

/// Builds the statistics of one family on its natural side.
pub fn make_spec(p: &FamilyParams) -> Result<StatisticsSpec, ZooError> {
    check_params(p)?;
    let n = p.n;
    let q = p.q_or_p.unwrap_or(0);
    let table = enumerate_partitions(n);
    let coeffs: Vec<Rational> = match p.family {
        Family::Boson => indicator(n, |l| l.len() == 1),
        Family::Fermion => indicator(n, |l| l.first() == 1),
        Family::Gentile => indicator(n, |l| l.first() <= q),
        Family::Paraboson => indicator(n, |l| l.len() <= q),
        Family::Parafermion => indicator(n, |l| l.first() <= q),
        Family::MaxwellBoltzmann => table.iter().map(|l| int(sn_irrep_dim(l) as i64)).collect(),
        Family::CappedDistinguishable => table
            .iter()
            .map(|l| if l.first() <= q { multinomial(l) } else { Rational::zero() })
            .collect(),
        Family::Jack21 => jack_21_symbolic().at(p.alpha.as_ref().expect("checked")).coeffs,
        Family::Immanon21 => alloc::vec![int(0), int(1), int(0)],
        Family::SemionN5 => alloc::vec![int(0), int(0), int(0), int(0), ratio(1, 3), ratio(1, 2), int(1)],
    };
    Ok(StatisticsSpec { n, side: p.family.natural_side(), coeffs, label: p.label() })
}

/// A coefficient vector `constant + alpha * slope`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaAffine {
    pub n: usize,
    pub side: Side,
    pub constant: Vec<Rational>,
    pub slope: Vec<Rational>,
}

impl AlphaAffine {
    pub fn at(&self, alpha: &Rational) -> StatisticsSpec {
        let coeffs = self.constant.iter().zip(&self.slope).map(|(c, s)| c + alpha * s).collect();
        StatisticsSpec { n: self.n, side: self.side, coeffs, label: format!("jack-21 alpha={alpha} N={}", self.n) }
    }

    /// Both parts mapped through the (linear) Kostka transform.
    pub fn on_side(&self, side: Side, transform: &KostkaTransform) -> Self {
        let map = |v: &Vec<Rational>| {
            let spec = StatisticsSpec { n: self.n, side: self.side, coeffs: v.clone(), label: String::new() };
            spec.on_side(side, transform).coeffs
        };
        Self { n: self.n, side, constant: map(&self.constant), slope: map(&self.slope) }
    }

    /// Entries such as `2+α` or `2-2α`.
    pub fn entries(&self) -> Vec<String> {
        self.constant
            .iter()
            .zip(&self.slope)
            .map(|(c, s)| {
                let slope = match s {
                    s if s.is_one() => String::from("α"),
                    s if (-s).is_one() => String::from("-α"),
                    s => format!("{s}α"),
                };
                match (c.is_zero(), s.is_zero()) {
                    (_, true) => format!("{c}"),
                    (true, false) => slope,
                    (false, false) if s.is_negative() => format!("{c}{slope}"),
                    (false, false) => format!("{c}+{slope}"),
                }
            })
            .collect()
    }
}

impl fmt::Display for AlphaAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries().join(","))
    }
}

/// `J_(2,1) = (2+α) m_(2,1) + 6 m_(1,1,1)` on the monomial side.
pub fn jack_21_symbolic() -> AlphaAffine {
    AlphaAffine {
        n: 3,
        side: Side::Monomial,
        constant: alloc::vec![int(0), int(2), int(6)],
        slope: alloc::vec![int(0), int(1), int(0)],
    }
}
