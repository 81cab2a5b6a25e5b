//! The Segre quadric ideal, separability certification, and the
//! entanglement measure built from swap binomials.
//!
//! A product state has amplitudes `α_x = ∏_s f_s[x_s]`, so for any pair of
//! indices the product `α_x α_y` is unchanged when the two indices trade
//! digits at any set of positions. Each such trade gives a quadric binomial;
//! the single-position trades are the classical 2×2 minors whose common zero
//! set is the Segre variety.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{MultiIndex, MultiQubitState, SingleQubitFactor};

/// Default threshold below which a residual counts as zero.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// A signed pair of amplitude-index pairs representing
/// `α_k α_l − α_{k′} α_{l′}`, stored in canonical form.
///
/// Canonical form: within each pair the lexicographically smaller index
/// comes first, the plus pair is lexicographically no larger than the minus
/// pair, and the two pairs differ. At every position the digit multisets of
/// the two pairs agree, which is exactly the condition that the binomial
/// lies in the Segre/toric ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadricBinomial {
    plus: (MultiIndex, MultiIndex),
    minus: (MultiIndex, MultiIndex),
}

impl QuadricBinomial {
    /// Canonicalizes and validates a binomial given as two index pairs.
    pub fn new(
        plus: (MultiIndex, MultiIndex),
        minus: (MultiIndex, MultiIndex),
    ) -> Result<Self> {
        let m = plus.0.m();
        for index in [plus.0, plus.1, minus.0, minus.1] {
            if index.m() != m {
                return Err(Error::IndexLengthMismatch {
                    index: index.to_string(),
                    got: index.m(),
                    expected: m,
                });
            }
        }
        // componentwise multiset balance: digit sums agree at each position
        for s in 1..=m {
            let plus_sum = plus.0.bit(s)? + plus.1.bit(s)?;
            let minus_sum = minus.0.bit(s)? + minus.1.bit(s)?;
            if plus_sum != minus_sum {
                return Err(Error::UnbalancedBinomial);
            }
        }
        let sort = |(a, b): (MultiIndex, MultiIndex)| if a <= b { (a, b) } else { (b, a) };
        let plus = sort(plus);
        let minus = sort(minus);
        if plus == minus {
            return Err(Error::TrivialBinomial);
        }
        let (plus, minus) = if plus <= minus { (plus, minus) } else { (minus, plus) };
        Ok(Self { plus, minus })
    }

    pub fn m(&self) -> usize {
        self.plus.0.m()
    }

    pub fn plus(&self) -> (MultiIndex, MultiIndex) {
        self.plus
    }

    pub fn minus(&self) -> (MultiIndex, MultiIndex) {
        self.minus
    }

    /// Evaluates `α_k α_l − α_{k′} α_{l′}` on a state's amplitudes.
    pub fn evaluate(&self, state: &MultiQubitState) -> Result<Complex64> {
        if self.m() != state.m() {
            return Err(Error::BinomialDimensionMismatch {
                binomial_m: self.m(),
                state_m: state.m(),
            });
        }
        Ok(state.amplitude(self.plus.0) * state.amplitude(self.plus.1)
            - state.amplitude(self.minus.0) * state.amplitude(self.minus.1))
    }
}

impl std::fmt::Display for QuadricBinomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "a_{} a_{} - a_{} a_{}",
            self.plus.0, self.plus.1, self.minus.0, self.minus.1
        )
    }
}

/// All distinct single-swap 2×2 minors of an `m`-qubit amplitude tensor,
/// sorted canonically.
///
/// For every index pair `(x, y)` and position `s` with `x_s ≠ y_s`, the swap
/// of digits at `s` yields `α_x α_y − α_{x′} α_{y′}`; pairs that differ only
/// at `s` are skipped because the binomial is identically zero.
pub fn single_swap_minors(m: usize) -> Result<Vec<QuadricBinomial>> {
    if m < 2 {
        return Err(Error::TooFewQubits { m });
    }
    let dim = 1usize << m;
    let mut set = BTreeSet::new();
    for x in 0..dim {
        for y in (x + 1)..dim {
            let diff = x ^ y;
            if diff.count_ones() < 2 {
                continue;
            }
            for s in 1..=m {
                let mask = 1usize << (s - 1);
                if diff & mask == 0 {
                    continue;
                }
                let plus = (MultiIndex::new(m, x)?, MultiIndex::new(m, y)?);
                let minus = (MultiIndex::new(m, x ^ mask)?, MultiIndex::new(m, y ^ mask)?);
                set.insert(QuadricBinomial::new(plus, minus)?);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Outcome of testing every single-swap minor against a zero threshold.
#[derive(Clone, Debug)]
pub struct SeparabilityReport {
    pub separable: bool,
    pub max_residual: f64,
    pub witness: QuadricBinomial,
    pub tolerance: f64,
}

/// Evaluates every single-swap minor on the state; the verdict is separable
/// exactly when all residuals stay at or below the tolerance. The witness is
/// a maximizing generator.
pub fn separability_report(state: &MultiQubitState, tolerance: f64) -> Result<SeparabilityReport> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidTolerance { value: tolerance });
    }
    let minors = single_swap_minors(state.m())?;
    let mut max_residual = -1.0f64;
    let mut witness = minors[0];
    for minor in &minors {
        let residual = minor.evaluate(state)?.norm();
        if residual > max_residual {
            max_residual = residual;
            witness = *minor;
        }
    }
    Ok(SeparabilityReport {
        separable: max_residual <= tolerance,
        max_residual,
        witness,
        tolerance,
    })
}

fn embed_raw(factors: &[SingleQubitFactor]) -> Result<Vec<Complex64>> {
    if factors.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    let m = factors.len();
    if m > crate::state::MAX_QUBITS {
        return Err(Error::TooManyQubits {
            m,
            max: crate::state::MAX_QUBITS,
        });
    }
    let dim = 1usize << m;
    let mut amplitudes = Vec::with_capacity(dim);
    for rank in 0..dim {
        let mut product = Complex64::ONE;
        for (j, factor) in factors.iter().enumerate() {
            // factor j is qubit m - j: the leftmost factor is the leftmost ket digit
            let bit = ((rank >> (m - 1 - j)) & 1) as u8;
            product *= factor.component(bit);
        }
        amplitudes.push(product);
    }
    Ok(amplitudes)
}

/// Segre embedding of single-qubit factors: the amplitude at
/// `(i_m, …, i_1)` is the product of one component per factor. The leftmost
/// factor supplies the leftmost ket digit. The result is normalized.
pub fn segre_embed(factors: &[SingleQubitFactor]) -> Result<MultiQubitState> {
    MultiQubitState::from_amplitudes(factors.len(), embed_raw(factors)?)?.normalize()
}

/// Segre embedding without the final normalization; the output norm is the
/// product of the factor norms.
pub fn segre_embed_unnormalized(factors: &[SingleQubitFactor]) -> Result<MultiQubitState> {
    MultiQubitState::from_amplitudes(factors.len(), embed_raw(factors)?)
}

/// Which swap subsets contribute to the measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureMode {
    /// Every nonempty proper swap subset.
    Full,
    /// Only single-position swaps, the pure 2×2-minor content.
    MinorsOnly,
}

/// Normalization constant and term selection for [`entanglement_measure`].
#[derive(Clone, Copy, Debug)]
pub struct MeasureConfig {
    /// The constant 𝓝 multiplying the term sum before the square root.
    pub norm_const: f64,
    pub mode: MeasureMode,
}

impl Default for MeasureConfig {
    fn default() -> Self {
        Self {
            norm_const: 1.0,
            mode: MeasureMode::Full,
        }
    }
}

/// The swap-binomial entanglement measure
/// `𝓕 = (𝓝 · Σ_pairs Σ_swaps |α_k α_l − α_{σ(k)} α_{σ(l)}|²)^{1/2}`.
///
/// Enumeration convention: unordered pairs `{k, l}` of distinct indices;
/// for each pair every nonempty subset `S` of the positions where `k` and
/// `l` differ, excluding `S = {1, …, m}`; `σ` trades the digits of `k` and
/// `l` at the positions in `S`. Complementary subsets contribute equal
/// terms and are both counted. The measure vanishes exactly on states whose
/// single-swap minors all vanish.
pub fn entanglement_measure(state: &MultiQubitState, config: &MeasureConfig) -> Result<f64> {
    if state.m() < 2 {
        return Err(Error::TooFewQubits { m: state.m() });
    }
    if !(config.norm_const > 0.0 && config.norm_const.is_finite()) {
        return Err(Error::InvalidNormConstant {
            value: config.norm_const,
        });
    }
    if !state.is_normalized() {
        return Err(Error::UnnormalizedState { norm: state.norm() });
    }
    let dim = state.dim();
    let full_mask = dim - 1;
    let mut sum = 0.0f64;
    for k in 0..dim {
        for l in (k + 1)..dim {
            let diff = k ^ l;
            let pair_product = state.amplitude_at_rank(k) * state.amplitude_at_rank(l);
            // nonempty submasks of diff, largest first
            let mut s = diff;
            while s > 0 {
                let keep = match config.mode {
                    MeasureMode::Full => s != full_mask,
                    MeasureMode::MinorsOnly => s.count_ones() == 1,
                };
                if keep {
                    let swapped =
                        state.amplitude_at_rank(k ^ s) * state.amplitude_at_rank(l ^ s);
                    sum += (pair_product - swapped).norm_sqr();
                }
                s = (s - 1) & diff;
            }
        }
    }
    Ok((config.norm_const * sum).sqrt())
}
