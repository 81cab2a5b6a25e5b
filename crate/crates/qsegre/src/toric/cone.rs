//! Convex polyhedral cones and lattice polytopes with exact arithmetic.
//!
//! Every verdict here is decided over the rationals; floats never enter a
//! cone computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::toric::simplex::{nonneg_combination, rational};

fn check_vectors(dim: usize, vectors: &[Vec<i64>]) -> Result<()> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    for v in vectors {
        if v.len() != dim {
            return Err(Error::ConeDimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
    }
    Ok(())
}

fn dedup_preserving_order(vectors: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(vectors.len());
    for v in vectors {
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

/// The cone of all nonnegative combinations of a finite integer generator
/// set `S ⊂ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    generators: Vec<Vec<i64>>,
}

impl RationalCone {
    /// Builds `Cone(S)`. Generators must be nonzero; duplicates are dropped.
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        check_vectors(dim, &generators)?;
        if generators.iter().any(|g| g.iter().all(|&x| x == 0)) {
            return Err(Error::ZeroGenerator);
        }
        Ok(Self {
            dim,
            generators: dedup_preserving_order(generators),
        })
    }

    /// The first orthant, generated by the standard basis.
    pub fn orthant(dim: usize) -> Result<Self> {
        let generators = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(j == i)).collect())
            .collect();
        Self::new(dim, generators)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Exact membership test: whether `v = Σ λ_i g_i` has a solution with
    /// all `λ_i ≥ 0`.
    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::ConeDimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let columns: Vec<Vec<BigRational>> = self
            .generators
            .iter()
            .map(|g| g.iter().map(|&x| rational(x)).collect())
            .collect();
        let target: Vec<BigRational> = v.iter().map(|&x| rational(x)).collect();
        Ok(nonneg_combination(&columns, &target).is_some())
    }

    /// Dual cone `σ^∧ = {u | ⟨u, v⟩ ≥ 0 for all v ∈ σ}` of a simplicial
    /// full-dimensional cone, with primitive integer generators.
    ///
    /// The generators are the rows of the inverse of the matrix whose
    /// columns are the cone's generators: row `i` pairs to `δ_ij ≥ 0` with
    /// generator `j`. Non-simplicial cones are unsupported; membership in
    /// the dual is still available by testing `⟨u, g⟩ ≥ 0` directly.
    pub fn dual(&self) -> Result<RationalCone> {
        if self.generators.len() != self.dim {
            return Err(Error::NonSimplicialCone {
                reason: format!(
                    "{} generator(s) in dimension {}",
                    self.generators.len(),
                    self.dim
                ),
            });
        }
        let inverse = invert(&self.generators).ok_or_else(|| Error::NonSimplicialCone {
            reason: "generators are linearly dependent".to_string(),
        })?;
        let mut dual_generators = Vec::with_capacity(self.dim);
        for row in inverse {
            dual_generators.push(primitive_integer(&row)?);
        }
        let dual = RationalCone::new(self.dim, dual_generators)?;
        debug_assert!(dual
            .generators
            .iter()
            .all(|u| self.generators.iter().all(|g| dot(u, g) >= 0)));
        Ok(dual)
    }

    /// Whether `σ ∩ (−σ) = {0}`: the only nonnegative combination of the
    /// generators summing to zero is the trivial one. Equivalently, no
    /// generator's negation lies back in the cone.
    pub fn is_strongly_convex(&self) -> bool {
        self.generators.iter().all(|g| {
            let negated: Vec<i64> = g.iter().map(|&x| -x).collect();
            !self.contains(&negated).expect("dimensions match")
        })
    }

    /// All lattice points of `σ ∩ [−bound, bound]^n`, sorted. These index
    /// the Laurent monomials generating the cone's monomial algebra up to
    /// the bound.
    pub fn lattice_support(&self, bound: u32) -> Result<Vec<Vec<i64>>> {
        if bound == 0 {
            return Err(Error::InvalidBound);
        }
        let bound = i64::from(bound);
        let mut point = vec![-bound; self.dim];
        let mut out = Vec::new();
        loop {
            if self.contains(&point)? {
                out.push(point.clone());
            }
            // odometer over the box, last coordinate fastest
            let mut axis = self.dim;
            loop {
                if axis == 0 {
                    return Ok(out);
                }
                axis -= 1;
                if point[axis] < bound {
                    point[axis] += 1;
                    for p in &mut point[axis + 1..] {
                        *p = -bound;
                    }
                    break;
                }
            }
        }
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| i128::from(x) * i128::from(y))
        .sum()
}

/// Inverse of a square i64 matrix over the rationals, by Gauss-Jordan.
fn invert(rows: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    // Work on the matrix whose columns are the generators: entry (i, j) is
    // coordinate i of generator j.
    let mut work: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..n).map(|j| rational(rows[j][i])).collect();
            row.extend((0..n).map(|j| rational(i64::from(i == j))));
            row
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot_row);
        let pivot = work[col][col].clone();
        for entry in work[col].iter_mut() {
            *entry /= &pivot;
        }
        let pivot_values = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pivot_entry) in row.iter_mut().zip(&pivot_values) {
                *entry -= &factor * pivot_entry;
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Scales a rational vector to the shortest integer vector on the same ray.
fn primitive_integer(row: &[BigRational]) -> Result<Vec<i64>> {
    let mut lcm = BigInt::from(1);
    for entry in row {
        lcm = lcm.lcm(entry.denom());
    }
    let scaled: Vec<BigInt> = row
        .iter()
        .map(|entry| entry.numer() * (&lcm / entry.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for value in &scaled {
        gcd = gcd.gcd(value);
    }
    if gcd.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    scaled
        .iter()
        .map(|value| (value / &gcd).to_i64().ok_or(Error::GeneratorOverflow))
        .collect()
}

/// The convex hull `Conv(S)` of a finite set of integer vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    /// Builds `Conv(S)`; duplicate vertices are dropped.
    pub fn new(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self> {
        check_vectors(dim, &vertices)?;
        Ok(Self {
            dim,
            vertices: dedup_preserving_order(vertices),
        })
    }

    /// The `m`-hypercube centered at the origin with vertices `(±1, …, ±1)`.
    pub fn hypercube(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDimension);
        }
        if m > crate::state::MAX_QUBITS {
            return Err(Error::TooManyQubits {
                m,
                max: crate::state::MAX_QUBITS,
            });
        }
        let vertices = (0..1usize << m)
            .map(|rank| {
                (0..m)
                    .map(|s| if (rank >> s) & 1 == 1 { 1 } else { -1 })
                    .collect()
            })
            .collect();
        Self::new(m, vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }
}
