//! The binomial ideal of the hypercube toric variety and its agreement with
//! the Segre minors.
//!
//! The embedding of (CP¹)^m into CP^{2^m−1} is indexed by the hypercube
//! vertices. Two degree-2 monomials in the chart coordinates agree exactly
//! when their vertex exponent sums agree, so every unordered pair of
//! vertex pairs with equal sums yields one quadric binomial on the
//! amplitudes. The single-swap minors are the special case where the two
//! pairs trade a single coordinate.

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::segre::{segre_embed, single_swap_minors, QuadricBinomial};
use crate::state::{family_state, MultiIndex, MultiQubitState, SingleQubitFactor, StateFamily};
use crate::toric::atlas::VertexExponentMap;
use crate::toric::cone::LatticePolytope;

/// Threshold below which toric quadrics must vanish on exact product
/// states.
pub const PRODUCT_VANISHING_TOLERANCE: f64 = 1e-10;

/// All degree-2 binomials of the hypercube toric ideal: for every two
/// unordered vertex pairs `{u, v}`, `{u′, v′}` of the `m`-hypercube with
/// `u + v = u′ + v′`, the binomial `α_{i(u)} α_{i(v)} − α_{i(u′)} α_{i(v′)}`
/// with indices taken through the vertex exponent map. Canonical,
/// deduplicated, sorted.
pub fn toric_ideal_quadrics(m: usize) -> Result<Vec<QuadricBinomial>> {
    if m < 2 {
        return Err(Error::TooFewQubits { m });
    }
    let vertices = LatticePolytope::hypercube(m)?.vertices().to_vec();
    let map = VertexExponentMap::new(m)?;

    // Group unordered vertex pairs by their coordinate sum.
    let mut by_sum: BTreeMap<Vec<i64>, Vec<(MultiIndex, MultiIndex)>> = BTreeMap::new();
    for (a, u) in vertices.iter().enumerate() {
        for v in &vertices[a..] {
            let sum: Vec<i64> = u.iter().zip(v).map(|(x, y)| x + y).collect();
            let pair = (map.index_for_vertex(u)?, map.index_for_vertex(v)?);
            by_sum.entry(sum).or_default().push(pair);
        }
    }

    let mut set = BTreeSet::new();
    for pairs in by_sum.values() {
        for (i, plus) in pairs.iter().enumerate() {
            for minus in &pairs[i + 1..] {
                set.insert(QuadricBinomial::new(*plus, *minus)?);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Residual summary from sampling one family of states against a generator
/// list.
#[derive(Clone, Debug)]
pub struct IdealEquivalenceReport {
    pub m: usize,
    pub trials: usize,
    pub seed: u64,
    /// Tolerance used to decide that every single-swap minor vanishes.
    pub minor_tolerance: f64,
    /// Bound the toric quadrics must then satisfy: `(m − 1) ×` the minor
    /// tolerance, since a swap of `k` positions telescopes into at most
    /// `m − 1` single swaps.
    pub derived_tolerance: f64,
    /// Largest toric residual over the sampled product states.
    pub product_max_residual: f64,
    /// Number of sampled states (product and dense) whose minors all vanish.
    pub minor_vanishing_states: usize,
    /// Largest toric residual over those minor-vanishing states.
    pub covanishing_max_residual: f64,
    /// Largest minor residual over the sampled dense states, for scale.
    pub dense_max_minor_residual: f64,
    pub verdict: bool,
}

/// Samples `trials` random product states and `trials` random dense states,
/// then checks the two falsifiable halves of "the toric ideal coincides with
/// the Segre ideal": (a) every toric quadric vanishes on every product
/// state within [`PRODUCT_VANISHING_TOLERANCE`], and (b) on every sampled
/// state whose single-swap minors all vanish within `tolerance`, the toric
/// quadrics vanish within the derived tolerance.
pub fn ideal_equivalence_report(
    m: usize,
    trials: usize,
    seed: u64,
    tolerance: f64,
) -> Result<IdealEquivalenceReport> {
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidTolerance { value: tolerance });
    }
    let minors = single_swap_minors(m)?;
    let quadrics = toric_ideal_quadrics(m)?;
    let derived_tolerance = (m - 1) as f64 * tolerance;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut states = Vec::with_capacity(2 * trials);
    for _ in 0..trials {
        let factors: Vec<SingleQubitFactor> =
            (0..m).map(|_| SingleQubitFactor::random(&mut rng)).collect();
        states.push((true, segre_embed(&factors)?));
    }
    for trial in 0..trials {
        states.push((
            false,
            family_state(StateFamily::RandomDense, m, Some(seed ^ (trial as u64 + 1)))?,
        ));
    }

    let max_residual = |generators: &[QuadricBinomial], state: &MultiQubitState| -> Result<f64> {
        let mut max = 0.0f64;
        for g in generators {
            max = max.max(g.evaluate(state)?.norm());
        }
        Ok(max)
    };

    let mut product_max_residual = 0.0f64;
    let mut dense_max_minor_residual = 0.0f64;
    let mut minor_vanishing_states = 0usize;
    let mut covanishing_max_residual = 0.0f64;

    for (is_product, state) in &states {
        let minor_residual = max_residual(&minors, state)?;
        let toric_residual = max_residual(&quadrics, state)?;
        if *is_product {
            product_max_residual = product_max_residual.max(toric_residual);
        } else {
            dense_max_minor_residual = dense_max_minor_residual.max(minor_residual);
        }
        if minor_residual <= tolerance {
            minor_vanishing_states += 1;
            covanishing_max_residual = covanishing_max_residual.max(toric_residual);
        }
    }

    let verdict = product_max_residual <= PRODUCT_VANISHING_TOLERANCE
        && covanishing_max_residual <= derived_tolerance;
    Ok(IdealEquivalenceReport {
        m,
        trials,
        seed,
        minor_tolerance: tolerance,
        derived_tolerance,
        product_max_residual,
        minor_vanishing_states,
        covanishing_max_residual,
        dense_max_minor_residual,
        verdict,
    })
}
