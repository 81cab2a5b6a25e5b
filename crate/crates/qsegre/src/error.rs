use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count must be at least 1")]
    ZeroQubits,

    #[error("qubit count {m} exceeds the supported maximum of {max}")]
    TooManyQubits { m: usize, max: usize },

    #[error("index rank {rank} is out of range for {m} qubit(s)")]
    RankOutOfRange { rank: usize, m: usize },

    #[error("invalid digit '{digit}' in index \"{index}\": digits must be 0 or 1")]
    InvalidIndexDigit { index: String, digit: char },

    #[error("duplicate amplitude index {index}")]
    DuplicateIndex { index: String },

    #[error("index {index} has length {got}, expected {expected}")]
    IndexLengthMismatch {
        index: String,
        got: usize,
        expected: usize,
    },

    #[error("non-finite amplitude component at index {index}")]
    NonFiniteAmplitude { index: String },

    #[error("cannot normalize zero state")]
    ZeroState,

    #[error("unknown state family \"{name}\"")]
    UnknownFamily { name: String },

    #[error("the w family requires at least 2 qubits")]
    WRequiresTwoQubits,

    #[error("qubit position {position} is out of range 1..={m}")]
    PositionOutOfRange { position: usize, m: usize },

    #[error("relabeling map is not a permutation of 1..={m}")]
    NotAPermutation { m: usize },

    #[error("a single-qubit factor must not be the zero vector")]
    ZeroFactor,

    #[error("factor list is empty")]
    EmptyFactorList,

    #[error("no quadric binomials exist for {m} qubit(s); at least 2 are required")]
    TooFewQubits { m: usize },

    #[error("binomial over {binomial_m} qubit(s) does not match a state of {state_m} qubit(s)")]
    BinomialDimensionMismatch { binomial_m: usize, state_m: usize },

    #[error("binomial index pairs are not componentwise balanced")]
    UnbalancedBinomial,

    #[error("binomial plus and minus pairs coincide")]
    TrivialBinomial,

    #[error("tolerance must be positive and finite, got {value}")]
    InvalidTolerance { value: f64 },

    #[error("normalization constant must be positive and finite, got {value}")]
    InvalidNormConstant { value: f64 },

    #[error("entanglement measure requires a normalized state (norm = {norm})")]
    UnnormalizedState { norm: f64 },

    #[error("zero vector passed to a block embedding")]
    ZeroVector,

    #[error("leaf dimensions must all be at least 2")]
    LeafDimensionTooSmall,

    #[error("partition tree has {expected} leaves but {got} leaf vectors were supplied")]
    LeafCountMismatch { expected: usize, got: usize },

    #[error("leaf {position} expects a vector of dimension {expected}, got {got}")]
    LeafDimensionMismatch {
        position: usize,
        expected: usize,
        got: usize,
    },

    #[error("partition tree covers dimension {dim}, which is not a power of two")]
    NonQubitTree { dim: usize },

    #[error("invalid partition tree syntax at byte {offset}: {reason}")]
    TreeSyntax { offset: usize, reason: String },

    #[error("tree leaf labels must read 1..=m from left to right, found [{found}]")]
    TreeLabelOrder { found: String },

    #[error("cone generators must be nonzero")]
    ZeroGenerator,

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("vector has dimension {got}, cone lives in dimension {expected}")]
    ConeDimensionMismatch { expected: usize, got: usize },

    #[error("dual cone requires a simplicial full-dimensional cone: {reason}")]
    NonSimplicialCone { reason: String },

    #[error("box bound must be at least 1")]
    InvalidBound,

    #[error("a computed generator exceeds the 64-bit integer range")]
    GeneratorOverflow,

    #[error("a Laurent monomial coefficient must be nonzero")]
    ZeroCoefficient,

    #[error("sign vector entries must be +1 or -1")]
    InvalidSign,

    #[error("trials must be at least 1")]
    InvalidTrials,

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
