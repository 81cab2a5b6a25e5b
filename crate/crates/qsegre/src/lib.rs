//! Algebraic-geometric tools for multi-qubit pure states.
//!
//! A pure state of `m` qubits is a point of CP^{2^m−1}; the fully separable
//! states form the Segre variety inside it, cut out by quadric binomials.
//! This crate certifies separability from those binomials, computes a
//! swap-binomial entanglement measure that vanishes exactly on the Segre
//! variety, composes block (partitioned) embeddings, and builds the
//! equivalent toric picture of (CP¹)^m from the hypercube: its chart atlas,
//! polyhedral cones with exact rational arithmetic, and the binomial toric
//! ideal that reproduces the Segre minors.
//!
//! The long-form guide lives in the `book/` directory of the repository;
//! its code listings run as doc-tests of the `qsegre-guide` crate.
//!
//! ```
//! use qsegre::{entanglement_measure, family_state, separability_report};
//! use qsegre::{MeasureConfig, StateFamily};
//!
//! let ghz = family_state(StateFamily::Ghz, 3, None)?;
//! let report = separability_report(&ghz, 1e-10)?;
//! assert!(!report.separable);
//! assert!((report.max_residual - 0.5).abs() < 1e-12);
//!
//! let measure = entanglement_measure(&ghz, &MeasureConfig::default())?;
//! assert!((measure - 3f64.sqrt()).abs() < 1e-12);
//! # Ok::<(), qsegre::Error>(())
//! ```

mod error;
pub mod json;
pub mod partition;
pub mod segre;
pub mod state;
pub mod toric;

pub use error::{Error, Result};
pub use partition::{block_segre, compose_partition, PartitionNode};
pub use segre::{
    entanglement_measure, segre_embed, segre_embed_unnormalized, separability_report,
    single_swap_minors, MeasureConfig, MeasureMode, QuadricBinomial, SeparabilityReport,
    DEFAULT_TOLERANCE,
};
pub use state::{
    family_state, MultiIndex, MultiQubitState, SingleQubitFactor, StateFamily, MAX_QUBITS,
};
pub use toric::{
    hypercube_atlas, ideal_equivalence_report, toric_ideal_quadrics, Chart, ChartAtlas,
    IdealEquivalenceReport, LatticeMonomial, LatticePolytope, RationalCone, VertexExponentMap,
};
