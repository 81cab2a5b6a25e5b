//! Brute-force oracles and input generators for the qsegre test suites.
//!
//! Everything here recomputes a result by direct enumeration, independently
//! of the code paths it is used to check: the measure oracle walks digit
//! arrays instead of bit masks, the cone oracle enumerates generator
//! subsets instead of running a simplex, and the quadric oracles
//! canonicalize plain rank tuples.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use qsegre::{MultiQubitState, PartitionNode, QuadricBinomial, SingleQubitFactor};

/// A quadric binomial reduced to plain canonical rank tuples, the common
/// currency for comparing generator sets against oracles.
pub type RankBinomial = ((usize, usize), (usize, usize));

/// Canonicalizes a pair of rank pairs: sorted within pairs, pairs sorted.
pub fn canonical_rank_binomial(p: (usize, usize), q: (usize, usize)) -> RankBinomial {
    let p = if p.0 <= p.1 { p } else { (p.1, p.0) };
    let q = if q.0 <= q.1 { q } else { (q.1, q.0) };
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

/// Converts canonical binomials to rank tuples for set comparison.
pub fn to_rank_pairs(binomials: &[QuadricBinomial]) -> BTreeSet<RankBinomial> {
    binomials
        .iter()
        .map(|b| {
            let (p0, p1) = b.plus();
            let (m0, m1) = b.minus();
            canonical_rank_binomial((p0.rank(), p1.rank()), (m0.rank(), m1.rank()))
        })
        .collect()
}

/// Every single-swap minor by direct enumeration of all `(x, y, s)` triples
/// with `x_s ≠ y_s` and a difference somewhere other than `s`.
pub fn minors_bruteforce(m: usize) -> BTreeSet<RankBinomial> {
    let dim = 1usize << m;
    let mut out = BTreeSet::new();
    for x in 0..dim {
        for y in 0..dim {
            for s in 1..=m {
                let bit = |r: usize, t: usize| (r >> (t - 1)) & 1;
                if bit(x, s) == bit(y, s) {
                    continue;
                }
                if !(1..=m).any(|t| t != s && bit(x, t) != bit(y, t)) {
                    continue;
                }
                let mask = 1usize << (s - 1);
                out.insert(canonical_rank_binomial((x, y), (x ^ mask, y ^ mask)));
            }
        }
    }
    out
}

/// Every balanced quadric binomial: unordered pairs of unordered index
/// pairs whose digit sums agree at every position.
pub fn balanced_quadrics_bruteforce(m: usize) -> BTreeSet<RankBinomial> {
    let dim = 1usize << m;
    let mut by_sum: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for x in 0..dim {
        for y in x..dim {
            let sums: Vec<usize> = (1..=m)
                .map(|s| ((x >> (s - 1)) & 1) + ((y >> (s - 1)) & 1))
                .collect();
            by_sum.entry(sums).or_default().push((x, y));
        }
    }
    let mut out = BTreeSet::new();
    for pairs in by_sum.values() {
        for (i, p) in pairs.iter().enumerate() {
            for q in &pairs[i + 1..] {
                out.insert(canonical_rank_binomial(*p, *q));
            }
        }
    }
    out
}

/// The swap-binomial measure by direct term enumeration: all ordered index
/// pairs, all nonempty proper swap subsets supported on the differing
/// digits, with the double counting of ordered pairs divided back out.
pub fn measure_bruteforce(state: &MultiQubitState, norm_const: f64) -> f64 {
    let m = state.m();
    let dim = state.dim();
    let digits = |r: usize| -> Vec<u8> { (0..m).map(|s| ((r >> s) & 1) as u8).collect() };
    let rank = |d: &[u8]| -> usize {
        d.iter()
            .enumerate()
            .map(|(s, &b)| usize::from(b) << s)
            .sum()
    };
    let mut sum = 0.0f64;
    for k in 0..dim {
        for l in 0..dim {
            if k == l {
                continue;
            }
            let (kd, ld) = (digits(k), digits(l));
            for subset in 1..(1usize << m) - 1 {
                if (0..m).any(|s| (subset >> s) & 1 == 1 && kd[s] == ld[s]) {
                    continue;
                }
                let mut ks = kd.clone();
                let mut ls = ld.clone();
                for s in 0..m {
                    if (subset >> s) & 1 == 1 {
                        std::mem::swap(&mut ks[s], &mut ls[s]);
                    }
                }
                let term = state.amplitude_at_rank(k) * state.amplitude_at_rank(l)
                    - state.amplitude_at_rank(rank(&ks)) * state.amplitude_at_rank(rank(&ls));
                sum += term.norm_sqr();
            }
        }
    }
    (norm_const * sum / 2.0).sqrt()
}

/// Random unnormalized single-qubit factors.
pub fn random_factors<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<SingleQubitFactor> {
    (0..m).map(|_| SingleQubitFactor::random(rng)).collect()
}

/// Every binary tree shape over `n` qubit leaves.
pub fn all_tree_shapes(n: usize) -> Vec<PartitionNode> {
    if n == 1 {
        return vec![PartitionNode::qubit_leaf()];
    }
    let mut out = Vec::new();
    for split in 1..n {
        for left in all_tree_shapes(split) {
            for right in all_tree_shapes(n - split) {
                out.push(PartitionNode::join(left.clone(), right));
            }
        }
    }
    out
}

fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Solves `B·λ = v` exactly when `B` (columns taken from `columns`) has
/// full column rank and the system is consistent; `None` otherwise.
fn solve_exact(columns: &[&Vec<i64>], v: &[i64]) -> Option<Vec<BigRational>> {
    let n = v.len();
    let k = columns.len();
    let mut work: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| rational(c[i])).collect();
            row.push(rational(v[i]));
            row
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(k);
    let mut r = 0usize;
    for col in 0..k {
        let Some(pivot) = (r..n).find(|&i| !work[i][col].is_zero()) else {
            return None; // dependent columns: a smaller subset covers this case
        };
        work.swap(r, pivot);
        let scale = work[r][col].clone();
        for entry in work[r].iter_mut() {
            *entry /= &scale;
        }
        let pivot_values = work[r].clone();
        for (i, row) in work.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pivot_entry) in row.iter_mut().zip(&pivot_values) {
                *entry -= &factor * pivot_entry;
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // consistency: rows below the pivots must have zero right-hand side
    if work.iter().skip(r).any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|col| work[pivot_rows[col]][k].clone()).collect())
}

/// Carathéodory search: `v` lies in the cone exactly when some linearly
/// independent generator subset of size at most `n` gives a nonnegative
/// solution of `B·λ = v`. This is the brute-force side of the Farkas
/// dichotomy, enumerated over all subsets.
pub fn cone_contains_bruteforce(generators: &[Vec<i64>], v: &[i64]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let n = v.len();
    use itertools::Itertools;
    for size in 1..=n.min(generators.len()) {
        for subset in generators.iter().combinations(size) {
            if let Some(lambda) = solve_exact(&subset, v) {
                if lambda.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Exhaustive check of strong convexity: no generator's negation may admit
/// a nonnegative-combination certificate.
pub fn strongly_convex_bruteforce(generators: &[Vec<i64>]) -> bool {
    generators.iter().all(|g| {
        let negated: Vec<i64> = g.iter().map(|&x| -x).collect();
        !cone_contains_bruteforce(generators, &negated)
    })
}

/// Determinant over the rationals, for rank checks on small matrices.
fn determinant(rows: &[Vec<i64>]) -> BigRational {
    let n = rows.len();
    let mut work: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| rational(x)).collect())
        .collect();
    let mut det = BigRational::from_integer(BigInt::from(1));
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !work[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            work.swap(col, pivot);
            det = -det;
        }
        det *= &work[col][col];
        let scale = work[col][col].clone();
        for entry in work[col].iter_mut() {
            *entry /= &scale;
        }
        let pivot_values = work[col].clone();
        for row in work.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pivot_entry) in row.iter_mut().zip(&pivot_values) {
                *entry -= &factor * pivot_entry;
            }
        }
    }
    det
}

/// `n` linearly independent primitive integer vectors with entries in
/// `[−bound, bound]`, suitable as a simplicial full-dimensional cone.
pub fn random_simplicial_generators<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    bound: i64,
) -> Vec<Vec<i64>> {
    loop {
        let candidate: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(-bound..=bound)).collect())
            .collect();
        if candidate.iter().any(|g| g.iter().all(|&x| x == 0)) {
            continue;
        }
        if determinant(&candidate).is_zero() {
            continue;
        }
        // primitive representatives keep dual-of-dual comparisons exact
        let primitive: Vec<Vec<i64>> = candidate
            .iter()
            .map(|g| {
                let gcd = g.iter().fold(0i64, |acc, &x| gcd_i64(acc, x.abs()));
                g.iter().map(|&x| x / gcd).collect()
            })
            .collect();
        return primitive;
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd_i64(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_binomial_canonicalization() {
        assert_eq!(
            canonical_rank_binomial((3, 0), (2, 1)),
            ((0, 3), (1, 2))
        );
        assert_eq!(
            canonical_rank_binomial((1, 2), (0, 3)),
            ((0, 3), (1, 2))
        );
    }

    #[test]
    fn two_qubit_minor_oracle() {
        let minors = minors_bruteforce(2);
        assert_eq!(minors.len(), 1);
        assert!(minors.contains(&((0, 3), (1, 2))));
        assert_eq!(balanced_quadrics_bruteforce(2), minors);
    }

    #[test]
    fn solve_exact_positive_case() {
        let g1 = vec![1i64, 0];
        let g2 = vec![1i64, 2];
        let lambda = solve_exact(&[&g1, &g2], &[2, 1]).unwrap();
        assert_eq!(lambda[0], BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(lambda[1], BigRational::new(BigInt::from(1), BigInt::from(2)));
    }

    #[test]
    fn caratheodory_on_the_orthant() {
        let generators = vec![vec![1, 0], vec![0, 1]];
        assert!(cone_contains_bruteforce(&generators, &[3, 5]));
        assert!(!cone_contains_bruteforce(&generators, &[-1, 0]));
    }

    #[test]
    fn bruteforce_strong_convexity() {
        assert!(strongly_convex_bruteforce(&[vec![1, 0], vec![0, 1]]));
        assert!(!strongly_convex_bruteforce(&[vec![1, 0], vec![-1, 0]]));
        assert!(!strongly_convex_bruteforce(&[
            vec![1, 1],
            vec![1, -1],
            vec![-1, 0]
        ]));
    }

    #[test]
    fn tree_shape_counts_are_catalan() {
        assert_eq!(all_tree_shapes(2).len(), 1);
        assert_eq!(all_tree_shapes(3).len(), 2);
        assert_eq!(all_tree_shapes(4).len(), 5);
        assert_eq!(all_tree_shapes(5).len(), 14);
    }
}
