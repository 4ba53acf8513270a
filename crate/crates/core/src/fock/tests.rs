use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::audit::ViolationKind;
use crate::partitions::enumerate_partitions;
use crate::scalar::{int, ratio};
use crate::symfunc::Locus;

const GENTILE2: AlgebraKind = AlgebraKind::GentileCos { q: 2, s: 1 };
const WANG2: AlgebraKind = AlgebraKind::WangRMatrix { flavors: 2 };

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn bracket_values() {
    for kind in [Deformation::Cos, Deformation::Sin] {
        let v: Vec<f64> = (1..=3).map(|n| bracket(kind, n, 2)).collect();
        assert!((v[0] - 1.0).abs() < 1e-12 && (v[1] - 1.0).abs() < 1e-12 && v[2].abs() < 1e-12);
        assert!((bracket(kind, 1, 1) - 1.0).abs() < 1e-12);
        assert!(bracket(kind, 2, 1).abs() < 1e-12);
        assert_eq!(bracket(kind, 0, 3), 0.0);
    }
    // cos(pi/3) = 1/2 term by term: [2] = 1/2 + 1/2
    let c = 0.5f64;
    assert!((bracket(Deformation::Cos, 2, 2) - (c + c)).abs() < 1e-15);
}

#[test]
fn bracket_truncates_at_q_plus_one() {
    for q in 1..=12 {
        for kind in [Deformation::Cos, Deformation::Sin] {
            assert!(bracket(kind, q + 1, q).abs() <= 1e-12, "{kind:?} q={q}");
            for n in 1..=q {
                assert!(bracket(kind, n, q) > 0.0);
            }
        }
    }
}

#[test]
fn cosine_and_sine_brackets_coincide() {
    for q in 1..=12 {
        for n in 0..=q + 1 {
            assert!((bracket(Deformation::Cos, n, q) - bracket(Deformation::Sin, n, q)).abs() < 1e-12);
        }
    }
}

#[test]
fn basis_sizes() {
    let wang = build_basis(&WANG2, 2, 2).unwrap();
    assert_eq!(wang.len(), 4);
    assert_eq!(wang[0], FockBasisState::Flavored(vec![2, 2]));
    let gentile = build_basis(&GENTILE2, 3, 3).unwrap();
    assert_eq!(gentile.len(), 7);
    assert_eq!(gentile[0], FockBasisState::Occupation(vec![2, 1, 0]));
    for m in 1..=6 {
        for n in 0..=m {
            let alg = AlgebraKind::BmSin { q: 1, s: -1 };
            assert_eq!(build_basis(&alg, m, n).unwrap().len(), binomial(m, n));
        }
    }
    // R-matrix: C(M, N) m^N
    let wang3 = AlgebraKind::WangRMatrix { flavors: 3 };
    assert_eq!(build_basis(&wang3, 4, 2).unwrap().len(), binomial(4, 2) * 9);
    assert_eq!(build_basis(&AlgebraKind::Boson, 2, 0).unwrap().len(), 1);
    assert_eq!(build_basis(&GENTILE2, 2, 5), Err(FockError::EmptySector { sites: 2, n: 5 }));
    assert_eq!(build_basis(&GENTILE2, 0, 0), Err(FockError::NoSites));
    assert!(build_basis(&AlgebraKind::GentileCos { q: 2, s: 0 }, 2, 1).is_err());
}

#[test]
fn basis_is_strictly_descending() {
    for alg in [GENTILE2, WANG2, AlgebraKind::Boson] {
        let b = build_basis(&alg, 3, 2).unwrap();
        assert!(b.windows(2).all(|w| w[0] > w[1]));
        assert!(b.iter().all(|s| s.particles() == 2));
    }
}

#[test]
fn gentile_hopping_element() {
    let basis = build_basis(&GENTILE2, 2, 2).unwrap();
    let h = build_hamiltonian(&GENTILE2, &basis, &HamiltonianSpec::Hopping(vec![(1, 2, 1.0)])).unwrap();
    let i20 = basis.iter().position(|s| s.raw() == [2, 0]).unwrap();
    let i11 = basis.iter().position(|s| s.raw() == [1, 1]).unwrap();
    // -t sqrt([2][1])
    assert!((h.matrix[i20][i11] + 1.0).abs() < 1e-12);
    assert!((h.matrix[i11][i20] + 1.0).abs() < 1e-12);
}

#[test]
fn diagonal_hamiltonians_are_diagonal() {
    for alg in [GENTILE2, AlgebraKind::BmSin { q: 3, s: -1 }, WANG2, AlgebraKind::Boson] {
        let basis = build_basis(&alg, 3, 2).unwrap();
        let h = build_hamiltonian(&alg, &basis, &HamiltonianSpec::Diagonal(vec![0.5, 1.25, -2.0])).unwrap();
        assert!(h.is_diagonal());
        for (k, s) in basis.iter().enumerate() {
            let e: f64 = (0..3).map(|i| [0.5, 1.25, -2.0][i] * s.occupancy(i) as f64).sum();
            assert_eq!(h.matrix[k][k], e);
        }
    }
    let basis = build_basis(&WANG2, 2, 2).unwrap();
    let h = build_hamiltonian(&WANG2, &basis, &HamiltonianSpec::Diagonal(vec![0.3, 1.9])).unwrap();
    assert!((0..4).all(|k| h.matrix[k][k] == 0.3 + 1.9));
}

#[test]
fn bad_specs() {
    let basis = build_basis(&GENTILE2, 2, 1).unwrap();
    let err = |spec| build_hamiltonian(&GENTILE2, &basis, &spec).unwrap_err();
    assert_eq!(err(HamiltonianSpec::Diagonal(vec![1.0])), FockError::DiagonalLength { expected: 2, got: 1 });
    assert_eq!(err(HamiltonianSpec::Hopping(vec![(1, 3, 1.0)])), FockError::BadSite { site: 3, sites: 2 });
    assert_eq!(err(HamiltonianSpec::Hopping(vec![(2, 2, 1.0)])), FockError::SelfHop(2));
    assert!(matches!(err(HamiltonianSpec::Hopping(vec![(1, 2, 1.0), (2, 1, 0.5)])), FockError::Asymmetric(_)));
}

fn random_hops(rng: &mut ChaCha8Rng, sites: usize) -> Vec<(usize, usize, f64)> {
    let mut hops = Vec::new();
    for i in 1..=sites {
        for j in i + 1..=sites {
            if rng.gen_bool(0.7) {
                hops.push((i, j, rng.gen_range(-2.0..2.0)));
            }
        }
    }
    hops
}

#[test]
fn trace_preserved_by_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let algs = [GENTILE2, AlgebraKind::BmSin { q: 3, s: -1 }, AlgebraKind::GentileCos { q: 4, s: -1 }, WANG2, AlgebraKind::Boson];
    for alg in algs {
        for _ in 0..4 {
            let sites = rng.gen_range(2..=4);
            let n = rng.gen_range(1..=3);
            let Ok(basis) = build_basis(&alg, sites, n) else { continue };
            let mut hops = random_hops(&mut rng, sites);
            hops.push((1, 2, 1.0));
            let h = build_hamiltonian(&alg, &basis, &HamiltonianSpec::Hopping(hops)).unwrap();
            let ev = eigenvalues_symmetric(&h, DEFAULT_EIGEN_TOL).unwrap();
            assert!((ev.iter().sum::<f64>() - h.trace()).abs() < 1e-9);
        }
    }
}

#[test]
fn wang_thermal_partition_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let basis = build_basis(&WANG2, 2, 2).unwrap();
    for _ in 0..20 {
        let beta: f64 = rng.gen_range(0.1..3.0);
        let (ea, eb): (f64, f64) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let h = build_hamiltonian(&WANG2, &basis, &HamiltonianSpec::Diagonal(vec![ea, eb])).unwrap();
        let z = thermal_partition_function(&eigenvalues_symmetric(&h, DEFAULT_EIGEN_TOL).unwrap(), beta);
        let expected = 4.0 * (-beta * (ea + eb)).exp();
        assert!(((z - expected) / expected).abs() <= 1e-12);
    }
}

#[test]
fn q1_limit_matches_antisymmetric_reference() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for sites in 2..=4 {
        for n in 1..=3.min(sites) {
            for _ in 0..3 {
                let hops = random_hops(&mut rng, sites);
                let reference = antisymmetric_reference_hamiltonian(sites, &hops, n).unwrap();
                let expected = eigenvalues_symmetric(&reference, DEFAULT_EIGEN_TOL).unwrap();
                for alg in [AlgebraKind::GentileCos { q: 1, s: -1 }, AlgebraKind::BmSin { q: 1, s: -1 }] {
                    let basis = build_basis(&alg, sites, n).unwrap();
                    let h = build_hamiltonian(&alg, &basis, &HamiltonianSpec::Hopping(hops.clone())).unwrap();
                    let got = eigenvalues_symmetric(&h, DEFAULT_EIGEN_TOL).unwrap();
                    assert!(got.iter().zip(&expected).all(|(a, b)| (a - b).abs() < 1e-9), "{alg} M={sites} N={n}");
                }
            }
        }
    }
}

#[test]
fn fermion_matrix_agrees_entrywise_with_reference() {
    // same basis order, so the matrices themselves coincide
    let hops = vec![(1, 2, 1.0), (2, 3, 0.7), (1, 3, -0.4), (3, 4, 1.3), (1, 4, 0.2)];
    let reference = antisymmetric_reference_hamiltonian(4, &hops, 2).unwrap();
    let alg = AlgebraKind::GentileCos { q: 1, s: -1 };
    let h = build_hamiltonian(&alg, &build_basis(&alg, 4, 2).unwrap(), &HamiltonianSpec::Hopping(hops)).unwrap();
    for (r1, r2) in h.matrix.iter().zip(&reference.matrix) {
        assert!(r1.iter().zip(r2).all(|(a, b)| (a - b).abs() < 1e-12));
    }
}

#[test]
fn symbolic_partition_functions() {
    let boson = symbolic_partition_function(&AlgebraKind::Boson, 2, 2, &VariableMap::identity(2)).unwrap();
    assert_eq!(alloc::format!("{}", boson.polynomial), "x1^2 + x1*x2 + x2^2");

    let wang = symbolic_partition_function(&WANG2, 2, 2, &VariableMap::new(vec![0, 0, 1, 1])).unwrap();
    assert_eq!(wang.polynomial.terms().len(), 1);
    assert_eq!(wang.polynomial.coeff(&[1, 1]), int(4));
    assert_eq!(wang.evaluate(&[int(3), int(5)]), int(60));

    let gentile = symbolic_partition_function(&GENTILE2, 3, 3, &VariableMap::identity(3)).unwrap();
    let m = gentile.monomial.unwrap();
    assert_eq!(m.to_vector(), vec![int(0), int(1), int(1)]);

    assert_eq!(
        symbolic_partition_function(&WANG2, 2, 2, &VariableMap::identity(2)),
        Err(FockError::MapLength { expected: 4, got: 2 })
    );
}

#[test]
fn wang_flavors_break_symmetry_off_locus() {
    let z = symbolic_partition_function(&WANG2, 2, 2, &VariableMap::identity(4)).unwrap();
    assert!(z.monomial.is_none());
}

#[test]
fn fit_wang() {
    let fit = fit_statistics(&WANG2, 2, &Locus::blocks(&[2, 2])).unwrap();
    assert_eq!(fit.spec.coeffs, vec![ratio(-1, 2), ratio(3, 2)]);
    assert_eq!(fit.verdict.omega, vec![ratio(-1, 2), int(1)]);
    let kinds = fit.verdict.kinds();
    assert!(kinds.contains(&ViolationKind::NegativeC));
    assert!(kinds.contains(&ViolationKind::FractionalOmega));
    assert!(!fit.verdict.qm_ok && !fit.verdict.sm_ok && !fit.verdict.qs_ok);

    assert_eq!(fit_statistics(&WANG2, 2, &Locus::free(4)).unwrap_err(), FockError::FlavorLocus { flavors: 2 });
    assert_eq!(fit_statistics(&WANG2, 2, &Locus::free(3)).unwrap_err(), FockError::FlavorCount { vars: 3, flavors: 2 });
}

#[test]
fn fit_gentile_q2() {
    let fit = fit_statistics(&GENTILE2, 4, &Locus::free(5)).unwrap();
    assert_eq!(fit.spec.coeffs, vec![int(0), int(0), int(1), int(0), int(-1)]);
    assert!(!fit.verdict.qm_ok && fit.verdict.sm_ok && !fit.verdict.qs_ok);
}

#[test]
fn fit_round_trip_for_free_references() {
    for n in 1..=4 {
        let p = enumerate_partitions(n).len();
        let mut e1 = vec![int(0); p];
        e1[0] = int(1);
        let mut elast = vec![int(0); p];
        elast[p - 1] = int(1);
        let boson = fit_statistics(&AlgebraKind::Boson, n, &Locus::free(n + 1)).unwrap();
        assert_eq!(boson.spec.coeffs, e1);
        assert!(boson.verdict.qs_ok);
        let fermion = fit_statistics(&AlgebraKind::GentileCos { q: 1, s: -1 }, n, &Locus::free(n + 1)).unwrap();
        assert_eq!(fermion.spec.coeffs, elast);
        assert!(fermion.verdict.qs_ok);
        // a cap that never binds is a boson
        let capped = fit_statistics(&AlgebraKind::BmSin { q: n, s: 1 }, n, &Locus::free(n + 1)).unwrap();
        assert_eq!(capped.spec.coeffs, e1);
    }
}

#[test]
fn fit_propagates_underdetermined() {
    let err = fit_statistics(&AlgebraKind::Boson, 3, &Locus::free(1)).unwrap_err();
    assert!(matches!(err, FockError::Fit(crate::symfunc::FitError::Underdetermined { .. })));
}

#[test]
fn freeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let hops = random_hops(&mut rng, 3);
        let fermion = freeness_check(&AlgebraKind::GentileCos { q: 1, s: -1 }, 3, &hops, 2, DEFAULT_FREENESS_TOL).unwrap();
        assert!(fermion.free && !fermion.greedy, "{}", fermion.max_deviation);
        let boson = freeness_check(&AlgebraKind::Boson, 3, &hops, 3, DEFAULT_FREENESS_TOL).unwrap();
        assert!(boson.free);
    }
    let generic = vec![(1, 2, 1.0), (2, 3, 1.4)];
    let g = freeness_check(&GENTILE2, 3, &generic, 2, DEFAULT_FREENESS_TOL).unwrap();
    assert!(!g.free);
    assert!(g.max_deviation > 1e-3);
    let b = freeness_check(&AlgebraKind::BmSin { q: 2, s: 1 }, 3, &generic, 2, DEFAULT_FREENESS_TOL).unwrap();
    assert!(!b.free);
}

#[test]
fn wang_freeness_uses_greedy_matching() {
    let r = freeness_check(&WANG2, 3, &[(1, 2, 1.0), (2, 3, 1.4)], 2, DEFAULT_FREENESS_TOL).unwrap();
    assert!(r.greedy);
    assert_eq!(r.spectrum.len(), 12);
    assert_eq!(r.candidates.len(), 15);
    assert!(r.free);
}
