//! Integer partitions in descending lexicographic order, dominance, and the
//! irrep dimensions of `S_N` and `U(m)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive and non-increasing: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("partitions have different weights ({left} vs {right})")]
    WeightMismatch { left: usize, right: usize },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A non-increasing tuple of positive integers.
///
/// `Ord` sorts by weight first and then in the descending lexicographic order
/// used for every vector and matrix in this crate, so `(4) < (3,1) < (2,2)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(PartitionError::NotPartition(parts))
        }
    }

    /// Sorts and drops zeros; any multiset of non-negative integers is accepted.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1).and_then(|k| self.parts.get(k)).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// Multiplicities of each part size, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `(3,1)`, `3,1`, `3 1` and `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| PartitionError::Parse(s.into())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n` in order, with 1-based positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    pub n: usize,
    pub ordered: Vec<Partition>,
    pub index: BTreeMap<Partition, usize>,
}

impl PartitionTable {
    /// `P(n)`.
    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    /// The partition at 1-based position `j`.
    pub fn get(&self, j: usize) -> &Partition {
        &self.ordered[j - 1]
    }

    /// 1-based position of `lambda`, if it is a partition of `n`.
    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.ordered.iter()
    }
}

pub fn enumerate_partitions(n: usize) -> PartitionTable {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut ordered = Vec::new();
    go(n, n, &mut Vec::new(), &mut ordered);
    let index = ordered.iter().cloned().zip(1..).collect();
    PartitionTable { n, ordered, index }
}

/// Transpose of the Young diagram.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.first())
        .map(|c| lambda.parts.iter().filter(|&&p| p >= c).count())
        .collect();
    Partition { parts }
}

/// `mu <= lambda` in dominance order.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool, PartitionError> {
    if mu.weight() != lambda.weight() {
        return Err(PartitionError::WeightMismatch { left: mu.weight(), right: lambda.weight() });
    }
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0, 0);
    for i in 1..=len {
        a += mu.part(i);
        b += lambda.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `f_lambda`, the dimension of the `S_N` irrep, by the determinantal product
/// `N! prod_{i<j} (l_i - l_j - i + j) / prod_i (l_i + l - i)!`.
pub fn sn_irrep_dim(lambda: &Partition) -> u128 {
    let l = lambda.len();
    let mut numer = factorial(lambda.weight());
    let mut denom = BigInt::one();
    for i in 1..=l {
        for j in i + 1..=l {
            numer *= (lambda.part(i) + j) - (lambda.part(j) + i);
        }
        denom *= factorial(lambda.part(i) + l - i);
    }
    (numer / denom).to_u128().expect("f_lambda exceeds u128")
}

/// Every `nu` with `mu ⊆ nu ⊆ shape` such that `nu / mu` is a horizontal strip,
/// optionally of a fixed size. Vectors are padded to `shape.len()`.
pub(crate) fn horizontal_strips(
    mu: &[usize],
    shape: &[usize],
    size: Option<usize>,
) -> Vec<Vec<usize>> {
    fn go(
        i: usize,
        mu: &[usize],
        shape: &[usize],
        left: Option<usize>,
        nu: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == shape.len() {
            if left.unwrap_or(0) == 0 {
                out.push(nu.clone());
            }
            return;
        }
        let cap = if i == 0 { shape[0] } else { shape[i].min(mu[i - 1]) };
        let cap = match left {
            Some(k) => cap.min(mu[i] + k),
            None => cap,
        };
        for v in mu[i]..=cap {
            nu[i] = v;
            go(i + 1, mu, shape, left.map(|k| k - (v - mu[i])), nu, out);
        }
        nu[i] = mu[i];
    }
    let mut out = Vec::new();
    let mut nu = mu.to_vec();
    go(0, mu, shape, size, &mut nu, &mut out);
    out
}

/// Counts SSYT of `shape` with entries in `1..=m` by adding one horizontal
/// strip per letter.
fn count_ssyt_bounded(shape: &Partition, m: usize) -> u128 {
    let target: Vec<usize> = shape.parts.clone();
    let mut layer: BTreeMap<Vec<usize>, u128> = BTreeMap::new();
    layer.insert(vec![0; target.len()], 1);
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (mu, count) in layer {
            for nu in horizontal_strips(&mu, &target, None) {
                *next.entry(nu).or_insert(0) += count;
            }
        }
        layer = next;
    }
    layer.get(&target).copied().unwrap_or(0)
}

/// Hook-content formula `prod (m + c(b)) / h(b)` over boxes `b`.
fn hook_content(shape: &Partition, m: usize) -> u128 {
    let conj = conjugate(shape);
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for i in 1..=shape.len() {
        for j in 1..=shape.part(i) {
            let content = m as i64 + j as i64 - i as i64;
            if content <= 0 {
                return 0;
            }
            numer *= content;
            denom *= (shape.part(i) - j) + (conj.part(j) - i) + 1;
        }
    }
    (numer / denom).to_u128().expect("U(m) dimension exceeds u128")
}

/// Weight up to which [`um_irrep_dim`] counts tableaux directly.
pub const SSYT_ENUMERATION_LIMIT: usize = 8;

/// Dimension of the `U(m)` irrep `lambda`: the number of SSYT with entries in
/// `1..=m`; zero when `l(lambda) > m`.
pub fn um_irrep_dim(lambda: &Partition, m: usize) -> u128 {
    if lambda.len() > m {
        return 0;
    }
    if lambda.weight() <= SSYT_ENUMERATION_LIMIT {
        count_ssyt_bounded(lambda, m)
    } else {
        hook_content(lambda, m)
    }
}

/// All permutations of `0..n` as image lists, each with its sign.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in signed_permutations(n - 1) {
        // insert n-1 at each position; moving it left past k entries costs (-1)^k
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let flips = p.len() - pos;
            out.push((q, if flips % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}
