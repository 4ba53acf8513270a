use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{
    decomposition_table, expectation, generic_rational_unitary, hadamard, isotypic_basis, permutation_apply, phi_basis,
    psi_basis, rmatrix_basis, rmatrix_mixing, single_particle_transform, span_membership, subspace_partition_function,
    transposition, w_q2_basis, Observable, SubspaceBasis, TensorVector,
};
use crate::partitions::Partition;
use crate::scalar::{QSqrt2, Rational};

/// One checked statement of an experiment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub description: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Experiment {
    pub name: String,
    pub claims: Vec<Claim>,
}

impl Experiment {
    pub fn pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

fn claim(description: &str, expected: impl ToString, observed: impl ToString) -> Claim {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    Claim { description: description.to_string(), pass: expected == observed, expected, observed }
}

const NAMES: [&str; 9] = [
    "hilbert-decomp",
    "psi13-p12",
    "observable-o132",
    "isotypic-21",
    "single-copy-21",
    "phi-span",
    "w-q2",
    "gentile-hadamard",
    "rmatrix-mixing",
];

pub fn experiment_names() -> &'static [&'static str] {
    &NAMES
}

fn p(n: usize, a: usize, b: usize) -> impl Fn(&TensorVector<Rational>) -> TensorVector<Rational> {
    let sigma = transposition(n, a, b);
    move |v| permutation_apply(&sigma, v).expect("valid transposition")
}

fn basis(vectors: Vec<TensorVector<Rational>>) -> SubspaceBasis<Rational> {
    SubspaceBasis::new(vectors).expect("built-in vectors are independent")
}

fn z_forms(b: &SubspaceBasis<Rational>, energy: &[usize]) -> (String, String) {
    let z = subspace_partition_function(b, energy).expect("built-in bases are energy eigenbases");
    let show = |p: Option<crate::SymPoly>| p.map_or_else(|| "not symmetric".to_string(), |p| p.to_string());
    (show(z.schur), show(z.monomial))
}

fn to_q(v: &TensorVector<Rational>) -> TensorVector<QSqrt2> {
    v.map_field(|c| QSqrt2::new(c.clone(), Rational::zero()))
}

/// Runs a named experiment; `None` for an unknown name.
pub fn run_experiment(name: &str) -> Option<Experiment> {
    let four = [0, 1, 2, 3];
    let claims = match name {
        "hilbert-decomp" => {
            let rows = decomposition_table(5, 6);
            let total: u128 = rows.iter().map(|r| r.product).sum();
            let listed: Vec<String> = rows.iter().map(|r| format!("{}:{}x{}", r.partition, r.sn_dim, r.um_dim)).collect();
            vec![
                claim(
                    "five particles on six levels",
                    "(5):1x252 (4,1):4x504 (3,2):5x420 (3,1,1):6x336 (2,2,1):5x210 (2,1,1,1):4x84 (1,1,1,1,1):1x6",
                    listed.join(" "),
                ),
                claim("dimensions add up to 6^5", 7776, total),
            ]
        }
        "psi13-p12" => {
            let psi = psi_basis();
            let span = basis(psi.clone());
            let v = p(3, 1, 2)(&psi[12]);
            vec![
                claim("rank of Psi_1..Psi_20", 20, span.dim()),
                claim("Psi_1 with repeated kets merged", "2|112> - 2|211>", &psi[0]),
                claim("P12 Psi_13", "|123> - |132> + |213> - |231>", &v),
                claim("Psi_13 lies in the span", true, span_membership(&span, &psi[12])),
                claim("P12 Psi_13 lies in the span", false, span_membership(&span, &v)),
            ]
        }
        "observable-o132" => {
            let psi13 = psi_basis().swap_remove(12);
            let v = p(3, 1, 2)(&psi13);
            let o = Observable::Projector(TensorVector::ket(4, &[1, 3, 2]).expect("ket in range"));
            vec![
                claim("<Psi_13|O|Psi_13>", 0, expectation(&o, &psi13).expect("same space")),
                claim("<P12 Psi_13|O|P12 Psi_13>", 1, expectation(&o, &v).expect("same space")),
            ]
        }
        "isotypic-21" => {
            let b = isotypic_basis(&Partition::new(vec![2, 1]).expect("partition"), 4);
            let (s, m) = z_forms(&b, &four);
            let u = generic_rational_unitary(4);
            vec![
                claim("dimension of the (2,1) isotypic sector", 40, b.dim()),
                claim("Z in Schur functions", "2*s(2,1)", s),
                claim("Z in monomials", "2*m(2,1) + 4*m(1,1,1)", m),
                claim("closed under P12 and P23", true, b.is_stable_under(p(3, 1, 2)) && b.is_stable_under(p(3, 2, 3))),
                claim("closed under a generic unitary", true, b.is_stable_under(|v| single_particle_transform(&u, v).expect("4 levels"))),
            ]
        }
        "single-copy-21" => {
            let b = basis(psi_basis());
            let (s, m) = z_forms(&b, &four);
            let u = generic_rational_unitary(4);
            vec![
                claim("Z in Schur functions", "s(2,1)", s),
                claim("Z in monomials", "m(2,1) + 2*m(1,1,1)", m),
                claim("closed under P12", false, b.is_stable_under(p(3, 1, 2))),
                claim("closed under a generic unitary", true, b.is_stable_under(|v| single_particle_transform(&u, v).expect("4 levels"))),
            ]
        }
        "phi-span" => {
            let b = basis(phi_basis());
            let u = generic_rational_unitary(4);
            let image = single_particle_transform(&u, &b.vectors()[0]).expect("4 levels");
            let z = subspace_partition_function(&b, &four).expect("energy eigenbasis");
            vec![
                claim("closed under P12 and P23", true, b.is_stable_under(p(3, 1, 2)) && b.is_stable_under(p(3, 2, 3))),
                claim("U phi_1 lies in the span", false, span_membership(&b, &image)),
                claim("Z", "2*x1*x2*x3", &z.polynomial),
                claim("Z has a symmetric-function expansion", false, z.monomial.is_some()),
            ]
        }
        "w-q2" => {
            let b = basis(w_q2_basis());
            let (s, m) = z_forms(&b, &four);
            let u = generic_rational_unitary(4);
            vec![
                claim("dimension", 16, b.dim()),
                claim("Z in monomials", "m(2,1) + m(1,1,1)", m),
                claim("Z in Schur functions", "s(2,1) - s(1,1,1)", s),
                claim("closed under P12 and P23", true, b.is_stable_under(p(3, 1, 2)) && b.is_stable_under(p(3, 2, 3))),
                claim("closed under a generic unitary", false, b.is_stable_under(|v| single_particle_transform(&u, v).expect("4 levels"))),
            ]
        }
        "gentile-hadamard" => {
            let v = TensorVector::<QSqrt2>::ket(2, &[1, 1, 2]).expect("ket in range");
            let image = single_particle_transform(&hadamard(), &v).expect("2 levels");
            vec![
                claim("amplitude of |+++> in |112>", "1/4*sqrt2", image.amplitude(&[1, 1, 1])),
                claim("amplitude of |---> in |112>", "-1/4*sqrt2", image.amplitude(&[2, 2, 2])),
            ]
        }
        "rmatrix-mixing" => {
            let psi = rmatrix_basis();
            let b = basis(psi.clone());
            let t = rmatrix_mixing();
            let image = single_particle_transform(&t, &to_q(&psi[1])).expect("4 levels");
            let bq = SubspaceBasis::new(psi.iter().map(to_q).collect()).expect("independent");
            let swap = p(2, 1, 2);
            let symmetric = SubspaceBasis::independent_subset(psi.iter().map(|v| v.plus(&swap(v)).expect("same space")).filter(|v| !v.is_zero()));
            let z = subspace_partition_function(&b, &[0, 0, 1, 1]).expect("energy eigenbasis");
            vec![
                claim("dimension", 4, b.dim()),
                claim("Z on the degenerate levels", "4*x1*x2", &z.polynomial),
                claim("closed under P12", true, b.is_stable_under(&swap)),
                claim("symmetric part of the P12 representation", 1, symmetric.dim()),
                claim("amplitude of |a,up>|a,down> in T psi_2", "1/2*sqrt2", image.amplitude(&[1, 2])),
                claim("amplitude of |a,down>|a,up> in T psi_2", "-1/2*sqrt2", image.amplitude(&[2, 1])),
                claim("T psi_2 lies in the span", false, span_membership(&bq, &image)),
            ]
        }
        _ => return None,
    };
    Some(Experiment { name: name.to_string(), claims })
}
