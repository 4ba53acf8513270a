//! Microstate counting with single-particle levels at energies `1, 2, 3, ...`.
//!
//! A microstate of `N` indistinguishable particles at total energy `E` is an
//! energy distribution (a partition of `E` into `N` parts). Its occupation type
//! records how many particles share a level, and a statistics with monomial
//! coefficients `Omega` weights each distribution by `Omega` of its type.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::audit::{Side, StatisticsSpec};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::Rational;
use crate::symfunc::KostkaTransform;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MicroError {
    #[error("statistics is for N={spec} but N={requested} was requested")]
    ParticleMismatch { spec: usize, requested: usize },
    #[error("fermionic occupancy {occupancy} exceeds degeneracy {degeneracy}")]
    Domain { occupancy: usize, degeneracy: usize },
    #[error("level degeneracy must be positive")]
    ZeroDegeneracy,
}

/// Particle energies in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnergyDistribution {
    pub energies: Vec<usize>,
}

impl EnergyDistribution {
    pub fn total(&self) -> usize {
        self.energies.iter().sum()
    }
}

impl fmt::Display for EnergyDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, e) in self.energies.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Partitions of `e` into exactly `n` positive parts, descending lexicographic.
pub fn enumerate_distributions(n: usize, e: usize) -> Vec<EnergyDistribution> {
    if n == 0 || e < n {
        return Vec::new();
    }
    enumerate_partitions(e)
        .ordered
        .into_iter()
        .filter(|l| l.len() == n)
        .map(|l| EnergyDistribution { energies: l.parts().to_vec() })
        .collect()
}

/// Multiplicities of repeated energies, sorted descending.
pub fn occupation_type(d: &EnergyDistribution) -> Partition {
    let as_partition = Partition::from_multiset(d.energies.clone());
    Partition::from_multiset(as_partition.multiplicities().into_iter().map(|(_, k)| k).collect())
}

fn omega_of(spec: &StatisticsSpec, n: usize) -> Result<StatisticsSpec, MicroError> {
    if spec.n != n {
        return Err(MicroError::ParticleMismatch { spec: spec.n, requested: n });
    }
    Ok(spec.on_side(Side::Monomial, &KostkaTransform::new(n)))
}

/// `sum_d Omega^{type(d)}` over the distributions at `(n, e)`.
pub fn count_microstates(spec: &StatisticsSpec, n: usize, e: usize) -> Result<Rational, MicroError> {
    let omega = omega_of(spec, n)?;
    let table = enumerate_partitions(n);
    Ok(enumerate_distributions(n, e)
        .iter()
        .map(|d| omega.coeffs[table.position(&occupation_type(d)).expect("type is a partition of n") - 1].clone())
        .sum())
}

/// Number of distributions of each occupation type at `(n, e)`.
pub fn type_counts(n: usize, e: usize) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for d in enumerate_distributions(n, e) {
        *out.entry(occupation_type(&d)).or_insert(0) += 1;
    }
    out
}

/// Coefficients of `t^0..=t^e_max` in `m_lambda(t, t^2, t^3, ...)`.
///
/// Levels are visited in increasing energy; each either stays empty or carries
/// one of the remaining part sizes, contributing `t^{level * part}`.
pub fn monomial_series(lambda: &Partition, e_max: usize) -> Vec<u64> {
    fn go(
        level: usize,
        rest: &Partition,
        e_max: usize,
        memo: &mut BTreeMap<(usize, Partition), Vec<u64>>,
    ) -> Vec<u64> {
        let mut out = vec![0u64; e_max + 1];
        if rest.is_empty() {
            out[0] = 1;
            return out;
        }
        // every remaining particle sits at energy >= level
        if level * rest.weight() > e_max {
            return out;
        }
        if let Some(v) = memo.get(&(level, rest.clone())) {
            return v.clone();
        }
        let skip = go(level + 1, rest, e_max, memo);
        for (k, c) in skip.iter().enumerate() {
            out[k] += c;
        }
        for (part, _) in rest.multiplicities() {
            let shift = level * part;
            let mut parts = rest.parts().to_vec();
            let at = parts.iter().position(|&p| p == part).expect("part present");
            parts.remove(at);
            let tail = go(level + 1, &Partition::from_multiset(parts), e_max, memo);
            for (k, c) in tail.iter().enumerate().take(e_max + 1 - shift.min(e_max + 1)) {
                out[k + shift] += c;
            }
        }
        memo.insert((level, rest.clone()), out.clone());
        out
    }
    go(1, lambda, e_max, &mut BTreeMap::new())
}

/// Microstate counts for `E = n..=e_max` read off the series expansion of
/// `Z = sum_J Omega^J m_J` at `x_i = t^i`.
pub fn microstates_from_series(spec: &StatisticsSpec, n: usize, e_max: usize) -> Result<Vec<Rational>, MicroError> {
    let omega = omega_of(spec, n)?;
    let mut series = vec![Rational::zero(); e_max + 1];
    for (lambda, w) in enumerate_partitions(n).iter().zip(&omega.coeffs) {
        if w.is_zero() {
            continue;
        }
        for (k, c) in monomial_series(lambda, e_max).into_iter().enumerate() {
            series[k] += w * Rational::from_integer(BigInt::from(c));
        }
    }
    Ok(series.into_iter().skip(n).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelFamily {
    Boson,
    Fermion,
    Distinguishable,
}

/// One degenerate energy level: `occupancy` particles in `degeneracy` states.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelOccupancy {
    pub energy: usize,
    pub occupancy: usize,
    pub degeneracy: usize,
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Number of microstates for a given filling of degenerate levels:
/// bosons `prod C(l+g-1, l)`, fermions `prod C(g, l)`, distinguishable
/// particles `N! prod g^l / l!`.
pub fn degenerate_level_weight(family: LevelFamily, levels: &[LevelOccupancy]) -> Result<Rational, MicroError> {
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for l in levels {
        if l.degeneracy == 0 {
            return Err(MicroError::ZeroDegeneracy);
        }
        match family {
            LevelFamily::Boson => numer *= binomial(l.occupancy + l.degeneracy - 1, l.occupancy),
            LevelFamily::Fermion => {
                if l.occupancy > l.degeneracy {
                    return Err(MicroError::Domain { occupancy: l.occupancy, degeneracy: l.degeneracy });
                }
                numer *= binomial(l.degeneracy, l.occupancy);
            }
            LevelFamily::Distinguishable => {
                numer *= BigInt::from(l.degeneracy).pow(l.occupancy as u32);
                denom *= factorial(l.occupancy);
            }
        }
    }
    if family == LevelFamily::Distinguishable {
        numer *= factorial(levels.iter().map(|l| l.occupancy).sum());
    }
    Ok(Rational::new(numer, denom))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MicrostateRow {
    pub distribution: EnergyDistribution,
    pub occupation_type: Partition,
    pub weights: Vec<Rational>,
}

/// One row per distribution, one column per statistics, and the totals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MicrostateTable {
    pub n: usize,
    pub e: usize,
    pub columns: Vec<String>,
    pub rows: Vec<MicrostateRow>,
    pub totals: Vec<Rational>,
}

/// Rows are grouped by occupation type in partition order, then by
/// distribution in descending lexicographic order.
pub fn microstate_table(specs: &[StatisticsSpec], n: usize, e: usize) -> Result<MicrostateTable, MicroError> {
    let omegas = specs.iter().map(|s| omega_of(s, n)).collect::<Result<Vec<_>, _>>()?;
    let table = enumerate_partitions(n);
    let mut rows: Vec<MicrostateRow> = enumerate_distributions(n, e)
        .into_iter()
        .map(|d| {
            let ty = occupation_type(&d);
            let j = table.position(&ty).expect("type is a partition of n") - 1;
            let weights = omegas.iter().map(|o| o.coeffs[j].clone()).collect();
            MicrostateRow { distribution: d, occupation_type: ty, weights }
        })
        .collect();
    rows.sort_by(|a, b| a.occupation_type.cmp(&b.occupation_type).then_with(|| b.distribution.cmp(&a.distribution)));
    let totals = (0..specs.len()).map(|k| rows.iter().map(|r| r.weights[k].clone()).sum()).collect();
    Ok(MicrostateTable { n, e, columns: specs.iter().map(|s| s.label.clone()).collect(), rows, totals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::conjugate;
    use crate::scalar::int;
    use crate::zoo::{make_spec, Family, FamilyParams};
    use alloc::string::ToString;

    fn family(f: Family, n: usize, q: Option<usize>) -> StatisticsSpec {
        let mut p = FamilyParams::new(f, n);
        p.q_or_p = q;
        make_spec(&p).unwrap()
    }

    fn all_families(n: usize) -> Vec<StatisticsSpec> {
        let mut out = vec![family(Family::Boson, n, None), family(Family::Fermion, n, None), family(Family::MaxwellBoltzmann, n, None)];
        for q in 1..=n {
            for f in [Family::Gentile, Family::Paraboson, Family::Parafermion, Family::CappedDistinguishable] {
                out.push(family(f, n, Some(q)));
            }
        }
        if n == 3 {
            out.push(make_spec(&FamilyParams::new(Family::Jack21, 3).with_alpha(int(2))).unwrap());
            out.push(family(Family::Immanon21, 3, None));
        }
        if n == 5 {
            out.push(family(Family::SemionN5, 5, None));
        }
        out
    }

    fn d(e: &[usize]) -> EnergyDistribution {
        EnergyDistribution { energies: e.to_vec() }
    }

    /// `s_lambda(t, t^2, ...) = t^{|l| + n(l)} / prod_boxes (1 - t^{hook})`.
    fn principal_schur(lambda: &Partition, e_max: usize) -> Vec<BigInt> {
        let conj = conjugate(lambda);
        let shift: usize = lambda.weight() + lambda.parts().iter().enumerate().map(|(i, &p)| i * p).sum::<usize>();
        let mut series = vec![BigInt::zero(); e_max + 1];
        if shift > e_max {
            return series;
        }
        series[shift] = BigInt::one();
        for i in 1..=lambda.len() {
            for j in 1..=lambda.part(i) {
                let h = (lambda.part(i) - j) + (conj.part(j) - i) + 1;
                // multiply by 1/(1 - t^h)
                for k in h..=e_max {
                    let prev = series[k - h].clone();
                    series[k] += prev;
                }
            }
        }
        series
    }

    #[test]
    fn distributions() {
        let ds = enumerate_distributions(4, 10);
        assert_eq!(ds.len(), 9);
        assert_eq!(ds[0], d(&[7, 1, 1, 1]));
        assert!(ds.contains(&d(&[4, 3, 2, 1])));
        assert_eq!(enumerate_distributions(1, 5), vec![d(&[5])]);
        assert!(enumerate_distributions(4, 3).is_empty());
        assert_eq!(d(&[3, 3, 2, 2]).to_string(), "[3,3,2,2]");
    }

    #[test]
    fn types() {
        assert_eq!(occupation_type(&d(&[7, 1, 1, 1])), Partition::new(vec![3, 1]).unwrap());
        assert_eq!(occupation_type(&d(&[4, 3, 2, 1])), Partition::column(4));
        assert_eq!(occupation_type(&d(&[4, 4, 1, 1])), Partition::new(vec![2, 2]).unwrap());
    }

    #[test]
    fn four_particles_at_energy_ten() {
        let cases = [
            (family(Family::Boson, 4, None), 9),
            (family(Family::Fermion, 4, None), 1),
            (family(Family::Gentile, 4, Some(2)), 6),
            (family(Family::Gentile, 4, Some(3)), 9),
            (family(Family::Gentile, 4, Some(4)), 9),
            (family(Family::Paraboson, 4, Some(2)), 30),
            (family(Family::Paraboson, 4, Some(3)), 36),
            (family(Family::Paraboson, 4, Some(4)), 37),
            (family(Family::Parafermion, 4, Some(2)), 14),
            (family(Family::Parafermion, 4, Some(3)), 28),
        ];
        for (spec, total) in cases {
            assert_eq!(count_microstates(&spec, 4, 10).unwrap(), int(total), "{}", spec.label);
            assert_eq!(microstates_from_series(&spec, 4, 10).unwrap()[6], int(total), "{}", spec.label);
        }
    }

    #[test]
    fn direct_and_series_agree_for_every_family() {
        for n in 1..=5 {
            for spec in all_families(n) {
                let series = microstates_from_series(&spec, n, 16).unwrap();
                for e in n..=16 {
                    assert_eq!(count_microstates(&spec, n, e).unwrap(), series[e - n], "{} e={e}", spec.label);
                }
            }
        }
    }

    #[test]
    fn series_matches_principal_specialisation() {
        for n in 1..=5 {
            let transform = KostkaTransform::new(n);
            for spec in all_families(n) {
                let c = spec.on_side(Side::Schur, &transform).coeffs;
                let mut expect = vec![Rational::zero(); 17];
                for (lambda, ci) in enumerate_partitions(n).iter().zip(&c) {
                    for (k, v) in principal_schur(lambda, 16).into_iter().enumerate() {
                        expect[k] += ci * Rational::from_integer(v);
                    }
                }
                assert_eq!(microstates_from_series(&spec, n, 16).unwrap(), expect[n..].to_vec(), "{}", spec.label);
            }
        }
    }

    #[test]
    fn bosons_count_partitions_into_n_parts() {
        // p(e, n) = p(e-1, n-1) + p(e-n, n)
        let mut p = vec![vec![0u64; 6]; 21];
        p[0][0] = 1;
        for e in 1..=20 {
            for n in 1..=5 {
                p[e][n] = p[e - 1][n - 1] + if e >= n { p[e - n][n] } else { 0 };
            }
        }
        for n in 1..=5 {
            let boson = family(Family::Boson, n, None);
            for e in n..=20 {
                assert_eq!(count_microstates(&boson, n, e).unwrap(), int(p[e][n] as i64));
            }
        }
    }

    #[test]
    fn weighted_type_decomposition() {
        let counts = type_counts(4, 10);
        let expect: Vec<usize> = vec![3, 2, 3, 1];
        assert_eq!(counts.values().copied().collect::<Vec<_>>(), expect);
        let pb = family(Family::Paraboson, 4, Some(2));
        let omega = pb.on_side(Side::Monomial, &KostkaTransform::new(4));
        let table = enumerate_partitions(4);
        let total: Rational = counts
            .iter()
            .map(|(ty, &k)| int(k as i64) * &omega.coeffs[table.position(ty).unwrap() - 1])
            .sum();
        assert_eq!(total, count_microstates(&pb, 4, 10).unwrap());
    }

    #[test]
    fn table_layout() {
        let specs = vec![family(Family::Boson, 4, None), family(Family::Gentile, 4, Some(2))];
        let t = microstate_table(&specs, 4, 10).unwrap();
        assert_eq!(t.totals, vec![int(9), int(6)]);
        let order: Vec<String> = t.rows.iter().map(|r| r.distribution.to_string()).collect();
        assert_eq!(order[..3], ["[7,1,1,1]", "[4,2,2,2]", "[3,3,3,1]"]);
        assert_eq!(order[8], "[4,3,2,1]");
        assert!(microstate_table(&specs, 5, 10).is_err());
    }

    #[test]
    fn level_weights() {
        let lvl = |occupancy, degeneracy| LevelOccupancy { energy: 1, occupancy, degeneracy };
        assert_eq!(degenerate_level_weight(LevelFamily::Boson, &[lvl(2, 2)]).unwrap(), int(3));
        let filled: Vec<_> = (0..4).map(|_| lvl(1, 1)).collect();
        assert_eq!(degenerate_level_weight(LevelFamily::Fermion, &filled).unwrap(), int(1));
        assert_eq!(degenerate_level_weight(LevelFamily::Distinguishable, &[lvl(1, 1), lvl(1, 1)]).unwrap(), int(2));
        assert_eq!(
            degenerate_level_weight(LevelFamily::Fermion, &[lvl(3, 2)]),
            Err(MicroError::Domain { occupancy: 3, degeneracy: 2 })
        );
    }

    #[test]
    fn level_weights_match_brute_force() {
        // states 0..g1 at level 1, g1..g1+g2 at level 2; count fillings with l1, l2 particles
        for (g1, g2) in [(1usize, 2usize), (2, 2), (3, 1)] {
            for l1 in 0..=3usize {
                for l2 in 0..=2usize {
                    let n = l1 + l2;
                    let states = g1 + g2;
                    let level = |s: usize| usize::from(s >= g1);
                    let mut boson = 0u64;
                    let mut fermion = 0u64;
                    let mut labelled = 0u64;
                    // labelled particles: every function particle -> state
                    let total = states.pow(n as u32);
                    for code in 0..total {
                        let mut c = code;
                        let mut assign = vec![0usize; n];
                        for a in assign.iter_mut() {
                            *a = c % states;
                            c /= states;
                        }
                        let at1 = assign.iter().filter(|&&s| level(s) == 0).count();
                        if at1 != l1 {
                            continue;
                        }
                        labelled += 1;
                        if assign.windows(2).all(|w| w[0] <= w[1]) {
                            boson += 1;
                            if assign.windows(2).all(|w| w[0] < w[1]) {
                                fermion += 1;
                            }
                        }
                    }
                    let levels = [
                        LevelOccupancy { energy: 1, occupancy: l1, degeneracy: g1 },
                        LevelOccupancy { energy: 2, occupancy: l2, degeneracy: g2 },
                    ];
                    assert_eq!(degenerate_level_weight(LevelFamily::Boson, &levels).unwrap(), int(boson as i64));
                    assert_eq!(degenerate_level_weight(LevelFamily::Distinguishable, &levels).unwrap(), int(labelled as i64));
                    if l1 <= g1 && l2 <= g2 {
                        assert_eq!(degenerate_level_weight(LevelFamily::Fermion, &levels).unwrap(), int(fermion as i64));
                    }
                }
            }
        }
    }
}
