use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{permutation_apply, SubspaceBasis, TensorVector};
use crate::linalg::Matrix;
use crate::partitions::{signed_permutations, Partition};
use crate::scalar::{int, QSqrt2, Rational};

fn vector(m: usize, n: usize, terms: &[(i64, [usize; 3])]) -> TensorVector<Rational> {
    let mut v = TensorVector::zero(m, n);
    for (c, ket) in terms {
        v.add_ket(int(*c), &ket[..n]).expect("ket in range");
    }
    v
}

/// The twenty vectors spanning one copy of the `(2,1)` unitary irrep in
/// `(C^4)^{(x) 3}`. The repeated kets of the first twelve are merged, so
/// `Psi_1 = 2|112> - 2|211>`.
pub fn psi_basis() -> Vec<TensorVector<Rational>> {
    let mut out = Vec::new();
    for i in 1..=4 {
        for j in (1..=4).filter(|&j| j != i) {
            out.push(vector(4, 3, &[(2, [i, i, j]), (-2, [j, i, i])]));
        }
    }
    for (a, b, c) in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)] {
        out.push(vector(4, 3, &[(1, [a, b, c]), (1, [b, a, c]), (-1, [c, b, a]), (-1, [c, a, b])]));
        out.push(vector(4, 3, &[(1, [a, c, b]), (1, [c, a, b]), (-1, [b, c, a]), (-1, [b, a, c])]));
    }
    out
}

/// Two vectors on levels 1..3 carrying the standard irrep of `S_3`.
pub fn phi_basis() -> Vec<TensorVector<Rational>> {
    vec![
        vector(4, 3, &[(1, [2, 1, 3]), (-1, [3, 1, 2]), (-1, [1, 3, 2]), (1, [1, 2, 3])]),
        vector(4, 3, &[(1, [2, 1, 3]), (-1, [3, 1, 2]), (-1, [3, 2, 1]), (1, [2, 3, 1])]),
    ]
}

/// Non-decreasing level lists of length `n` over `1..=m`, each level used at most `cap` times.
fn multisets(m: usize, n: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, n: usize, cap: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for l in start..=m {
            if prefix.iter().filter(|&&x| x == l).count() == cap {
                continue;
            }
            prefix.push(l);
            go(m, n, cap, l, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, cap, 1, &mut Vec::new(), &mut out);
    out
}

/// Symmetrized kets (sum over distinct orderings) for every multiset whose
/// levels repeat at most `cap` times.
pub fn symmetric_basis(m: usize, n: usize, cap: usize) -> Vec<TensorVector<Rational>> {
    multisets(m, n, cap)
        .into_iter()
        .map(|levels| {
            let mut kets: Vec<Vec<usize>> = signed_permutations(n).into_iter().map(|(p, _)| p.iter().map(|&k| levels[k]).collect()).collect();
            kets.sort_unstable();
            kets.dedup();
            let mut v = TensorVector::zero(m, n);
            for k in kets {
                v.add_ket(Rational::one(), &k).expect("ket in range");
            }
            v
        })
        .collect()
}

/// Totally symmetric three-particle states on four levels without triple occupancy.
pub fn w_q2_basis() -> Vec<TensorVector<Rational>> {
    symmetric_basis(4, 3, 2)
}

/// `|ij> - |ji>` for `i < j`, the antisymmetric two-particle basis.
pub fn antisymmetric_pair_basis(m: usize) -> Vec<TensorVector<Rational>> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            out.push(vector(m, 2, &[(1, [i, j, 0]), (-1, [j, i, 0])]));
        }
    }
    out
}

/// The four-dimensional two-particle space of the two-flavour R-matrix
/// model. Levels are `1 = (a,up)`, `2 = (a,down)`, `3 = (b,up)`, `4 = (b,down)`.
pub fn rmatrix_basis() -> Vec<TensorVector<Rational>> {
    vec![
        vector(4, 2, &[(1, [1, 4, 0]), (-1, [3, 2, 0])]),
        vector(4, 2, &[(1, [1, 3, 0]), (-1, [3, 1, 0])]),
        vector(4, 2, &[(1, [2, 3, 0]), (-1, [4, 1, 0])]),
        vector(4, 2, &[(1, [2, 4, 0]), (-1, [4, 2, 0])]),
    ]
}

/// Single-particle change of basis mixing `(a,down)` and `(b,up)`:
/// level 2 maps to `(|2> + |3>)/sqrt 2`, level 3 to `(|2> - |3>)/sqrt 2`.
pub fn rmatrix_mixing() -> Matrix<QSqrt2> {
    let h = QSqrt2::inv_sqrt2();
    let z = QSqrt2::zero();
    let o = QSqrt2::one();
    vec![
        vec![o.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), h.clone(), h.clone(), z.clone()],
        vec![z.clone(), h.clone(), -h, z.clone()],
        vec![z.clone(), z.clone(), z, o],
    ]
}

/// `|+-> = (|1> +- |2>)/sqrt 2` on two levels; it is its own inverse.
pub fn hadamard() -> Matrix<QSqrt2> {
    let h = QSqrt2::inv_sqrt2();
    vec![vec![h.clone(), h.clone()], vec![h.clone(), -h]]
}

/// Householder reflection `I - 2 u u^T / u^T u` with `u = (1, 2, ..., m)`:
/// an exact orthogonal matrix that mixes every level with every other.
pub fn generic_rational_unitary(m: usize) -> Matrix<Rational> {
    let u: Vec<Rational> = (1..=m as i64).map(int).collect();
    let norm: Rational = u.iter().map(|x| x * x).sum();
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { int(1) } else { int(0) } - int(2) * &u[i] * &u[j] / &norm).collect())
        .collect()
}

/// Standard Young tableaux of `shape`, rows listing slots `1..=n`.
pub fn standard_tableaux(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(shape.parts(), &mut vec![Vec::new(); shape.len()], 1, shape.weight(), &mut out);
    out
}

/// Image of `(C^m)^{(x) n}` under the Young symmetrizer of `tableau`:
/// row symmetrization followed by column antisymmetrization.
pub fn young_symmetrizer_image(tableau: &[Vec<usize>], m: usize) -> SubspaceBasis<Rational> {
    let n: usize = tableau.iter().map(Vec::len).sum();
    let columns: Vec<Vec<usize>> = (0..tableau.first().map_or(0, Vec::len))
        .map(|c| tableau.iter().filter_map(|row| row.get(c).copied()).collect())
        .collect();
    let perms = signed_permutations(n);
    // slot sets are 1-based; permutations act on 0-based slots
    let preserves = |sigma: &[usize], blocks: &[Vec<usize>]| blocks.iter().all(|b| b.iter().all(|&s| b.contains(&(sigma[s - 1] + 1))));
    let rows: Vec<&Vec<usize>> = perms.iter().filter(|(p, _)| preserves(p, tableau)).map(|(p, _)| p).collect();
    let cols: Vec<(&Vec<usize>, i8)> = perms.iter().filter(|(p, _)| preserves(p, &columns)).map(|(p, s)| (p, *s)).collect();
    let images = multisets_all(m, n).into_iter().map(|ket| {
        let start = TensorVector::ket(m, &ket).expect("ket in range");
        let mut sym = TensorVector::zero(m, n);
        for p in &rows {
            sym = sym.plus(&permutation_apply(p, &start).expect("valid permutation")).expect("same space");
        }
        let mut out = TensorVector::zero(m, n);
        for (p, s) in &cols {
            let moved = permutation_apply(p, &sym).expect("valid permutation");
            out = out.plus(&moved.scaled(&int(i64::from(*s)))).expect("same space");
        }
        out
    });
    SubspaceBasis::independent_subset(images)
}

/// Every ket of `(C^m)^{(x) n}` in lexicographic order.
fn multisets_all(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|k: Vec<usize>| (1..=m).map(move |l| [k.as_slice(), &[l]].concat())).collect();
    }
    out
}

/// Full isotypic component of `shape`: the sum of the Young symmetrizer images
/// over all standard tableaux.
pub fn isotypic_basis(shape: &Partition, m: usize) -> SubspaceBasis<Rational> {
    let vectors = standard_tableaux(shape).iter().flat_map(|t| young_symmetrizer_image(t, m).vectors().to_vec()).collect::<Vec<_>>();
    SubspaceBasis::independent_subset(vectors)
}
