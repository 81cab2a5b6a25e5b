//! Laurent monomials and the support of Laurent polynomials.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::toric::cone::RationalCone;

/// A Laurent monomial `λ · z^β` with `β ∈ Z^n` and `λ ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeMonomial {
    exponent: Vec<i64>,
    coefficient: Complex64,
}

impl LatticeMonomial {
    pub fn new(exponent: Vec<i64>, coefficient: Complex64) -> Result<Self> {
        if coefficient == Complex64::ZERO {
            return Err(Error::ZeroCoefficient);
        }
        if exponent.is_empty() {
            return Err(Error::ZeroDimension);
        }
        Ok(Self {
            exponent,
            coefficient,
        })
    }

    pub fn exponent(&self) -> &[i64] {
        &self.exponent
    }

    pub fn coefficient(&self) -> Complex64 {
        self.coefficient
    }
}

/// Support of the Laurent polynomial `Σ terms`: the exponents whose combined
/// coefficient is nonzero, sorted. Terms sharing an exponent are summed and
/// cancel only if the sum is exactly zero.
pub fn support(terms: &[LatticeMonomial]) -> Vec<Vec<i64>> {
    let mut combined: std::collections::BTreeMap<Vec<i64>, Complex64> =
        std::collections::BTreeMap::new();
    for term in terms {
        *combined.entry(term.exponent.clone()).or_insert(Complex64::ZERO) += term.coefficient;
    }
    combined
        .into_iter()
        .filter(|(_, coefficient)| *coefficient != Complex64::ZERO)
        .map(|(exponent, _)| exponent)
        .collect()
}

/// Whether the polynomial lies in the monomial algebra `R_σ`, i.e. its
/// support is contained in the cone.
pub fn in_monomial_algebra(terms: &[LatticeMonomial], cone: &RationalCone) -> Result<bool> {
    for exponent in support(terms) {
        if !cone.contains(&exponent)? {
            return Ok(false);
        }
    }
    Ok(true)
}
