//! Dense multi-qubit pure states and their index arithmetic.
//!
//! A state on `m` qubits is a vector of `2^m` complex amplitudes indexed by
//! binary strings `x_m x_{m-1} … x_1`. The canonical rank of an index is the
//! integer with `x_m` as the most significant bit, so the string shown to a
//! user reads the same way as the ket label: rank 2 on three qubits is
//! `|010⟩`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::segre;

/// Largest supported qubit count. The amplitude vector has `2^m` entries, so
/// this caps allocations at 16 Mi complex numbers.
pub const MAX_QUBITS: usize = 24;

/// Two states whose squared norms differ from 1 by at most this are treated
/// as normalized.
pub const NORMALIZED_EPS: f64 = 1e-12;

fn check_qubit_count(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroQubits);
    }
    if m > MAX_QUBITS {
        return Err(Error::TooManyQubits { m, max: MAX_QUBITS });
    }
    Ok(())
}

/// A binary multi-index `x_m x_{m-1} … x_1` stored as its canonical rank.
///
/// Position `s` counts from the right: `x_1` is the least significant bit.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    m: usize,
    rank: usize,
}

impl MultiIndex {
    /// Index with the given rank in `[0, 2^m)`.
    pub fn new(m: usize, rank: usize) -> Result<Self> {
        check_qubit_count(m)?;
        if rank >= 1 << m {
            return Err(Error::RankOutOfRange { rank, m });
        }
        Ok(Self { m, rank })
    }

    /// Builds an index from digits listed as `x_m, x_{m-1}, …, x_1`
    /// (the display order).
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        check_qubit_count(bits.len())?;
        let mut rank = 0usize;
        for &b in bits {
            if b > 1 {
                return Err(Error::InvalidIndexDigit {
                    index: bits.iter().map(|b| b.to_string()).collect(),
                    digit: char::from(b'0' + b.min(9)),
                });
            }
            rank = (rank << 1) | usize::from(b);
        }
        Ok(Self { m: bits.len(), rank })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Digit `x_s` for `s` in `1..=m`.
    pub fn bit(&self, s: usize) -> Result<u8> {
        if s == 0 || s > self.m {
            return Err(Error::PositionOutOfRange {
                position: s,
                m: self.m,
            });
        }
        Ok(((self.rank >> (s - 1)) & 1) as u8)
    }

    /// Copy of this index with digit `x_s` replaced.
    pub fn with_bit(&self, s: usize, value: u8) -> Result<Self> {
        if s == 0 || s > self.m {
            return Err(Error::PositionOutOfRange {
                position: s,
                m: self.m,
            });
        }
        let mask = 1usize << (s - 1);
        let rank = if value & 1 == 1 {
            self.rank | mask
        } else {
            self.rank & !mask
        };
        Ok(Self { m: self.m, rank })
    }

    /// Digits in display order `x_m, …, x_1`.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.m)
            .map(|i| ((self.rank >> (self.m - 1 - i)) & 1) as u8)
            .collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiIndex({self})")
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::ZeroQubits);
        }
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::InvalidIndexDigit {
                        index: s.to_string(),
                        digit: c,
                    })
                }
            }
        }
        Self::from_bits(&bits)
    }
}

/// A point of CP¹ in homogeneous coordinates, used as one qubit of a
/// product state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingleQubitFactor {
    a0: Complex64,
    a1: Complex64,
}

impl SingleQubitFactor {
    pub fn new(a0: Complex64, a1: Complex64) -> Result<Self> {
        if !(a0.re.is_finite() && a0.im.is_finite() && a1.re.is_finite() && a1.im.is_finite()) {
            return Err(Error::NonFiniteAmplitude {
                index: "factor".to_string(),
            });
        }
        if a0 == Complex64::ZERO && a1 == Complex64::ZERO {
            return Err(Error::ZeroFactor);
        }
        Ok(Self { a0, a1 })
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    pub fn a1(&self) -> Complex64 {
        self.a1
    }

    /// Component selected by a binary digit.
    pub fn component(&self, bit: u8) -> Complex64 {
        if bit & 1 == 0 {
            self.a0
        } else {
            self.a1
        }
    }

    pub fn norm(&self) -> f64 {
        (self.a0.norm_sqr() + self.a1.norm_sqr()).sqrt()
    }

    /// Factor scaled to unit norm.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        Self {
            a0: self.a0 / n,
            a1: self.a1 / n,
        }
    }

    /// Standard complex Gaussian components, resampled if both vanish.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let a0 = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            let a1 = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
            if let Ok(f) = Self::new(a0, a1) {
                return f;
            }
        }
    }
}

/// An `m`-qubit pure state as a dense vector of `2^m` amplitudes.
///
/// States are immutable values: every operation returns a new state.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiQubitState {
    m: usize,
    amplitudes: Vec<Complex64>,
    normalized: bool,
}

impl MultiQubitState {
    /// Builds a state from a full amplitude vector of length `2^m`.
    pub fn from_amplitudes(m: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_qubit_count(m)?;
        if amplitudes.len() != 1 << m {
            return Err(Error::IndexLengthMismatch {
                index: format!("amplitude vector of length {}", amplitudes.len()),
                got: amplitudes.len(),
                expected: 1 << m,
            });
        }
        for (rank, a) in amplitudes.iter().enumerate() {
            if !(a.re.is_finite() && a.im.is_finite()) {
                return Err(Error::NonFiniteAmplitude {
                    index: MultiIndex { m, rank }.to_string(),
                });
            }
        }
        let normalized = {
            let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
            (norm_sqr - 1.0).abs() <= NORMALIZED_EPS
        };
        Ok(Self {
            m,
            amplitudes,
            normalized,
        })
    }

    /// Builds a state from sparse `(index, amplitude)` entries; unlisted
    /// amplitudes are zero. The state is not auto-normalized.
    pub fn make_state(m: usize, entries: &[(MultiIndex, Complex64)]) -> Result<Self> {
        check_qubit_count(m)?;
        let mut amplitudes = vec![Complex64::ZERO; 1 << m];
        let mut seen = vec![false; 1 << m];
        for (index, value) in entries {
            if index.m() != m {
                return Err(Error::IndexLengthMismatch {
                    index: index.to_string(),
                    got: index.m(),
                    expected: m,
                });
            }
            if seen[index.rank()] {
                return Err(Error::DuplicateIndex {
                    index: index.to_string(),
                });
            }
            if !(value.re.is_finite() && value.im.is_finite()) {
                return Err(Error::NonFiniteAmplitude {
                    index: index.to_string(),
                });
            }
            seen[index.rank()] = true;
            amplitudes[index.rank()] = *value;
        }
        Self::from_amplitudes(m, amplitudes)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    /// Whether the squared norm is within `NORMALIZED_EPS` of 1.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude at a multi-index.
    ///
    /// Panics if the index length does not match the state; operations that
    /// accept user data validate dimensions before calling this.
    pub fn amplitude(&self, index: MultiIndex) -> Complex64 {
        assert_eq!(index.m(), self.m, "index length must match qubit count");
        self.amplitudes[index.rank()]
    }

    /// Amplitude at a raw rank.
    pub fn amplitude_at_rank(&self, rank: usize) -> Complex64 {
        self.amplitudes[rank]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Same ray, unit norm.
    pub fn normalize(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroState);
        }
        let amplitudes = self.amplitudes.iter().map(|a| a / norm).collect();
        Self::from_amplitudes(self.m, amplitudes)
    }

    /// Multiplies every amplitude by a complex scalar.
    pub fn scale(&self, factor: Complex64) -> Result<Self> {
        let amplitudes = self.amplitudes.iter().map(|a| a * factor).collect();
        Self::from_amplitudes(self.m, amplitudes)
    }

    /// Moves qubit `s` to position `target[s-1]` for each `s`; `target` must
    /// be a permutation of `1..=m`.
    pub fn relabel_qubits(&self, target: &[usize]) -> Result<Self> {
        if target.len() != self.m {
            return Err(Error::NotAPermutation { m: self.m });
        }
        let mut seen = vec![false; self.m];
        for &t in target {
            if t == 0 || t > self.m || seen[t - 1] {
                return Err(Error::NotAPermutation { m: self.m });
            }
            seen[t - 1] = true;
        }
        let mut amplitudes = vec![Complex64::ZERO; self.dim()];
        for rank in 0..self.dim() {
            let mut image = 0usize;
            for s in 1..=self.m {
                if (rank >> (s - 1)) & 1 == 1 {
                    image |= 1 << (target[s - 1] - 1);
                }
            }
            amplitudes[image] = self.amplitudes[rank];
        }
        Self::from_amplitudes(self.m, amplitudes)
    }
}

impl fmt::Display for MultiQubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for rank in 0..self.dim() {
            let a = self.amplitudes[rank];
            if a == Complex64::ZERO {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let index = MultiIndex { m: self.m, rank };
            write!(f, "({:.6}{:+.6}i)|{}⟩", a.re, a.im, index)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Named state families used for tests and benchmarks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateFamily {
    Ghz,
    W,
    ProductBasis,
    RandomProduct,
    RandomDense,
}

impl StateFamily {
    pub fn name(&self) -> &'static str {
        match self {
            StateFamily::Ghz => "ghz",
            StateFamily::W => "w",
            StateFamily::ProductBasis => "product-basis",
            StateFamily::RandomProduct => "random-product",
            StateFamily::RandomDense => "random-dense",
        }
    }
}

impl FromStr for StateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ghz" => Ok(StateFamily::Ghz),
            "w" => Ok(StateFamily::W),
            "product-basis" => Ok(StateFamily::ProductBasis),
            "random-product" => Ok(StateFamily::RandomProduct),
            "random-dense" => Ok(StateFamily::RandomDense),
            other => Err(Error::UnknownFamily {
                name: other.to_string(),
            }),
        }
    }
}

/// Constructs a member of a named family. Random families are deterministic
/// for a fixed seed; a missing seed means seed 0.
pub fn family_state(family: StateFamily, m: usize, seed: Option<u64>) -> Result<MultiQubitState> {
    check_qubit_count(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
    match family {
        StateFamily::Ghz => {
            let dim = 1usize << m;
            let mut amplitudes = vec![Complex64::ZERO; dim];
            let a = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            amplitudes[0] = a;
            amplitudes[dim - 1] = a;
            MultiQubitState::from_amplitudes(m, amplitudes)
        }
        StateFamily::W => {
            if m < 2 {
                return Err(Error::WRequiresTwoQubits);
            }
            let mut amplitudes = vec![Complex64::ZERO; 1 << m];
            let a = Complex64::new(1.0 / (m as f64).sqrt(), 0.0);
            for s in 0..m {
                amplitudes[1 << s] = a;
            }
            MultiQubitState::from_amplitudes(m, amplitudes)
        }
        StateFamily::ProductBasis => {
            let rank = rng.random_range(0..1usize << m);
            let mut amplitudes = vec![Complex64::ZERO; 1 << m];
            amplitudes[rank] = Complex64::ONE;
            MultiQubitState::from_amplitudes(m, amplitudes)
        }
        StateFamily::RandomProduct => {
            let factors: Vec<SingleQubitFactor> =
                (0..m).map(|_| SingleQubitFactor::random(&mut rng)).collect();
            segre::segre_embed(&factors)
        }
        StateFamily::RandomDense => loop {
            let amplitudes: Vec<Complex64> = (0..1usize << m)
                .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect();
            let state = MultiQubitState::from_amplitudes(m, amplitudes)?;
            if state.norm() > 0.0 {
                return state.normalize();
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn idx(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    #[test]
    fn rank_and_bits_round_trip() {
        for m in 1..=6 {
            for rank in 0..1usize << m {
                let index = MultiIndex::new(m, rank).unwrap();
                let back = MultiIndex::from_bits(&index.bits()).unwrap();
                assert_eq!(back, index);
                let parsed: MultiIndex = index.to_string().parse().unwrap();
                assert_eq!(parsed, index);
            }
        }
    }

    #[test]
    fn display_puts_high_position_first() {
        // rank 2 on 3 qubits is x_3 x_2 x_1 = 010
        let index = MultiIndex::new(3, 2).unwrap();
        assert_eq!(index.to_string(), "010");
        assert_eq!(index.bit(1).unwrap(), 0);
        assert_eq!(index.bit(2).unwrap(), 1);
        assert_eq!(index.bit(3).unwrap(), 0);
    }

    #[test]
    fn with_bit_edits_one_position() {
        let index = idx("010");
        assert_eq!(index.with_bit(1, 1).unwrap().to_string(), "011");
        assert_eq!(index.with_bit(2, 0).unwrap().to_string(), "000");
        assert_eq!(index.with_bit(3, 1).unwrap().to_string(), "110");
        assert!(index.with_bit(4, 0).is_err());
    }

    #[test]
    fn make_state_basis() {
        let state = MultiQubitState::make_state(2, &[(idx("00"), c(1.0, 0.0))]).unwrap();
        assert!(state.is_normalized());
        assert_eq!(state.amplitude(idx("00")), c(1.0, 0.0));
        assert_eq!(state.amplitude(idx("11")), Complex64::ZERO);
    }

    #[test]
    fn make_state_bell_is_normalized() {
        let a = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let state =
            MultiQubitState::make_state(2, &[(idx("00"), a), (idx("11"), a)]).unwrap();
        assert!(state.is_normalized());
        assert_abs_diff_eq!(state.norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn make_state_rejects_duplicates_naming_the_index() {
        let err = MultiQubitState::make_state(
            1,
            &[(idx("0"), c(1.0, 0.0)), (idx("0"), c(1.0, 0.0))],
        )
        .unwrap_err();
        match err {
            Error::DuplicateIndex { index } => assert_eq!(index, "0"),
            other => panic!("expected duplicate-index error, got {other}"),
        }
    }

    #[test]
    fn make_state_rejects_length_mismatch() {
        let err =
            MultiQubitState::make_state(2, &[(idx("0"), c(1.0, 0.0))]).unwrap_err();
        assert!(matches!(err, Error::IndexLengthMismatch { .. }));
    }

    #[test]
    fn make_state_rejects_non_finite() {
        let err = MultiQubitState::make_state(1, &[(idx("0"), c(f64::NAN, 0.0))]).unwrap_err();
        assert!(matches!(err, Error::NonFiniteAmplitude { .. }));
    }

    #[test]
    fn normalize_scales() {
        let state = MultiQubitState::make_state(1, &[(idx("0"), c(2.0, 0.0))]).unwrap();
        let normalized = state.normalize().unwrap();
        assert_eq!(normalized.amplitude(idx("0")), c(1.0, 0.0));
        assert_eq!(normalized.amplitude(idx("1")), Complex64::ZERO);
    }

    #[test]
    fn normalize_uniform_four() {
        let entries: Vec<_> = (0..4)
            .map(|r| (MultiIndex::new(2, r).unwrap(), c(1.0, 0.0)))
            .collect();
        let state = MultiQubitState::make_state(2, &entries).unwrap();
        let normalized = state.normalize().unwrap();
        for rank in 0..4 {
            assert_abs_diff_eq!(normalized.amplitude_at_rank(rank).re, 0.5, epsilon = 1e-15);
        }
    }

    #[test]
    fn normalize_zero_state_fails() {
        let state = MultiQubitState::make_state(1, &[]).unwrap();
        assert!(matches!(state.normalize(), Err(Error::ZeroState)));
    }

    #[test]
    fn normalize_is_idempotent() {
        let state = family_state(StateFamily::RandomDense, 4, Some(11)).unwrap();
        let once = state.normalize().unwrap();
        let twice = once.normalize().unwrap();
        for rank in 0..state.dim() {
            let d = (once.amplitude_at_rank(rank) - twice.amplitude_at_rank(rank)).norm();
            assert!(d <= 1e-15, "idempotence violated by {d}");
        }
    }

    #[test]
    fn ghz_two_is_the_bell_state() {
        let state = family_state(StateFamily::Ghz, 2, None).unwrap();
        let a = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(state.amplitude(idx("00")).re, a, epsilon = 1e-15);
        assert_abs_diff_eq!(state.amplitude(idx("11")).re, a, epsilon = 1e-15);
        assert_eq!(state.amplitude(idx("01")), Complex64::ZERO);
        assert_eq!(state.amplitude(idx("10")), Complex64::ZERO);
    }

    #[test]
    fn w_three_is_uniform_weight_one() {
        let state = family_state(StateFamily::W, 3, None).unwrap();
        let a = 1.0 / 3f64.sqrt();
        for label in ["001", "010", "100"] {
            assert_abs_diff_eq!(state.amplitude(idx(label)).re, a, epsilon = 1e-15);
        }
        assert_eq!(state.amplitude(idx("000")), Complex64::ZERO);
        assert_eq!(state.amplitude(idx("111")), Complex64::ZERO);
    }

    #[test]
    fn w_requires_two_qubits() {
        assert!(matches!(
            family_state(StateFamily::W, 1, None),
            Err(Error::WRequiresTwoQubits)
        ));
    }

    #[test]
    fn random_families_are_seed_deterministic() {
        for family in [StateFamily::RandomProduct, StateFamily::RandomDense] {
            let a = family_state(family, 4, Some(7)).unwrap();
            let b = family_state(family, 4, Some(7)).unwrap();
            assert_eq!(a, b);
            let c = family_state(family, 4, Some(8)).unwrap();
            assert_ne!(a, c);
        }
    }

    #[test]
    fn random_dense_norm_is_one_up_to_m_ten() {
        for m in 1..=10 {
            let state = family_state(StateFamily::RandomDense, m, Some(3)).unwrap();
            assert!((state.norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn relabel_qubits_permutes_ranks() {
        // swap x_1 and x_2 of |01⟩ -> |10⟩
        let state = MultiQubitState::make_state(2, &[(idx("01"), c(1.0, 0.0))]).unwrap();
        let swapped = state.relabel_qubits(&[2, 1]).unwrap();
        assert_eq!(swapped.amplitude(idx("10")), c(1.0, 0.0));
        assert!(state.relabel_qubits(&[1, 1]).is_err());
    }

    #[test]
    fn unknown_family_name_is_rejected() {
        let err = "bell".parse::<StateFamily>().unwrap_err();
        assert!(matches!(err, Error::UnknownFamily { .. }));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn amplitude_strategy() -> impl Strategy<Value = Complex64> {
            (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(re, im)| Complex64::new(re, im))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn make_state_reads_back_bit_exactly(
                m in 1usize..5,
                values in proptest::collection::vec(amplitude_strategy(), 1..8),
            ) {
                // distinct indices, bit-exact read-back of every entry
                let entries: Vec<(MultiIndex, Complex64)> = values
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i < 1 << m)
                    .map(|(i, v)| (MultiIndex::new(m, i).unwrap(), *v))
                    .collect();
                let state = MultiQubitState::make_state(m, &entries).unwrap();
                for (index, value) in &entries {
                    prop_assert_eq!(state.amplitude(*index), *value);
                }
                for rank in entries.len()..1 << m {
                    prop_assert_eq!(state.amplitude_at_rank(rank), Complex64::ZERO);
                }
            }
        }
    }
}
