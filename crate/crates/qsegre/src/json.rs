//! JSON schemas shared by the library, the command line, and test fixtures.
//!
//! State files look like
//! `{"m": 3, "amplitudes": [{"index": "010", "re": 0.5, "im": 0.0}, ...]}`
//! where the index string reads `x_m…x_1` left to right and omitted indices
//! are zero. Cone files look like `{"n": 2, "generators": [[1,0],[1,2]]}`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::segre::QuadricBinomial;
use crate::state::{MultiIndex, MultiQubitState, SingleQubitFactor};
use crate::toric::RationalCone;
use num_complex::Complex64;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AmplitudeJson {
    pub index: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateJson {
    pub m: usize,
    pub amplitudes: Vec<AmplitudeJson>,
}

impl StateJson {
    /// Full-record form of a state: every index appears, zeros included.
    pub fn from_state(state: &MultiQubitState) -> Self {
        let amplitudes = (0..state.dim())
            .map(|rank| {
                let index = MultiIndex::new(state.m(), rank).expect("rank in range");
                let a = state.amplitude_at_rank(rank);
                AmplitudeJson {
                    index: index.to_string(),
                    re: a.re,
                    im: a.im,
                }
            })
            .collect();
        Self {
            m: state.m(),
            amplitudes,
        }
    }

    pub fn to_state(&self) -> Result<MultiQubitState> {
        let entries = self
            .amplitudes
            .iter()
            .map(|a| {
                let index: MultiIndex = a.index.parse()?;
                Ok((index, Complex64::new(a.re, a.im)))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiQubitState::make_state(self.m, &entries)
    }
}

pub fn read_state(json: &str) -> Result<MultiQubitState> {
    let parsed: StateJson = serde_json::from_str(json)?;
    parsed.to_state()
}

pub fn write_state(state: &MultiQubitState) -> String {
    serde_json::to_string_pretty(&StateJson::from_state(state)).expect("schema serializes")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorJson {
    pub a0: ComplexJson,
    pub a1: ComplexJson,
}

/// Factor files: `{"factors": [{"a0": {"re":1,"im":0}, "a1": ...}, ...]}`,
/// leftmost factor first (the leftmost ket digit).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorsJson {
    pub factors: Vec<FactorJson>,
}

impl FactorsJson {
    pub fn to_factors(&self) -> Result<Vec<SingleQubitFactor>> {
        self.factors
            .iter()
            .map(|f| {
                SingleQubitFactor::new(
                    Complex64::new(f.a0.re, f.a0.im),
                    Complex64::new(f.a1.re, f.a1.im),
                )
            })
            .collect()
    }
}

pub fn read_factors(json: &str) -> Result<Vec<SingleQubitFactor>> {
    let parsed: FactorsJson = serde_json::from_str(json)?;
    parsed.to_factors()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeJson {
    pub n: usize,
    pub generators: Vec<Vec<i64>>,
}

impl ConeJson {
    pub fn from_cone(cone: &RationalCone) -> Self {
        Self {
            n: cone.dim(),
            generators: cone.generators().to_vec(),
        }
    }

    pub fn to_cone(&self) -> Result<RationalCone> {
        RationalCone::new(self.n, self.generators.clone())
    }
}

pub fn read_cone(json: &str) -> Result<RationalCone> {
    let parsed: ConeJson = serde_json::from_str(json)?;
    parsed.to_cone()
}

/// One binomial as `{"plus": ["000","111"], "minus": ["011","100"]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BinomialJson {
    pub plus: [String; 2],
    pub minus: [String; 2],
}

impl From<&QuadricBinomial> for BinomialJson {
    fn from(b: &QuadricBinomial) -> Self {
        let (p0, p1) = b.plus();
        let (m0, m1) = b.minus();
        Self {
            plus: [p0.to_string(), p1.to_string()],
            minus: [m0.to_string(), m1.to_string()],
        }
    }
}

impl BinomialJson {
    pub fn to_binomial(&self) -> Result<QuadricBinomial> {
        QuadricBinomial::new(
            (self.plus[0].parse()?, self.plus[1].parse()?),
            (self.minus[0].parse()?, self.minus[1].parse()?),
        )
    }
}

pub fn write_binomials(binomials: &[QuadricBinomial]) -> String {
    let list: Vec<BinomialJson> = binomials.iter().map(BinomialJson::from).collect();
    serde_json::to_string_pretty(&list).expect("schema serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{family_state, StateFamily};
    use proptest::prelude::*;

    #[test]
    fn state_example_from_the_schema_doc() {
        let text = r#"{"m": 3, "amplitudes": [{"index": "010", "re": 0.5, "im": 0.0}]}"#;
        let state = read_state(text).unwrap();
        let index: MultiIndex = "010".parse().unwrap();
        assert_eq!(state.amplitude(index), Complex64::new(0.5, 0.0));
        assert_eq!(state.amplitude_at_rank(0), Complex64::ZERO);
    }

    #[test]
    fn duplicate_indices_fail_on_read() {
        let text = r#"{"m": 1, "amplitudes": [
            {"index": "0", "re": 1.0, "im": 0.0},
            {"index": "0", "re": 1.0, "im": 0.0}]}"#;
        assert!(read_state(text).is_err());
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(read_state("{\"m\": 2, \"amplitudes\": [").is_err());
    }

    #[test]
    fn cone_round_trip() {
        let text = r#"{"n": 2, "generators": [[1,0],[1,2]]}"#;
        let cone = read_cone(text).unwrap();
        assert_eq!(cone.generators(), &[vec![1, 0], vec![1, 2]]);
        let again = read_cone(&serde_json::to_string(&ConeJson::from_cone(&cone)).unwrap()).unwrap();
        assert_eq!(again, cone);
    }

    #[test]
    fn binomial_json_round_trip() {
        let minors = crate::segre::single_swap_minors(3).unwrap();
        let text = write_binomials(&minors);
        let parsed: Vec<BinomialJson> = serde_json::from_str(&text).unwrap();
        let back: Vec<QuadricBinomial> = parsed
            .iter()
            .map(|b| b.to_binomial().unwrap())
            .collect();
        assert_eq!(back, minors);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn state_json_round_trips_bit_exactly(seed in 0u64..2000, m in 1usize..5) {
            let state = family_state(StateFamily::RandomDense, m, Some(seed)).unwrap();
            let back = read_state(&write_state(&state)).unwrap();
            prop_assert_eq!(state.amplitudes(), back.amplitudes());
        }
    }
}
