//! Polyhedral geometry and the hypercube toric description of (CP¹)^m:
//! exact rational cones, dual cones, strong convexity, lattice supports,
//! the 2^m-chart atlas, and the binomial toric ideal matching the Segre
//! minors.

mod atlas;
mod cone;
mod ideal;
mod monomial;
mod simplex;

pub use atlas::{hypercube_atlas, Chart, ChartAtlas, VertexExponentMap};
pub use cone::{LatticePolytope, RationalCone};
pub use ideal::{
    ideal_equivalence_report, toric_ideal_quadrics, IdealEquivalenceReport,
    PRODUCT_VANISHING_TOLERANCE,
};
pub use monomial::{in_monomial_algebra, support, LatticeMonomial};
