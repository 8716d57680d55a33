use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{self, TropMatrix};
use crate::scalar::{Exponent, Tolerance, TropScalar};

/// Eigenvalue of an irreducible matrix and a generating set of its eigenvectors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralOutcome {
    pub lambda: TropScalar,
    /// A_λ⁺ with A_λ = λ⁻¹A; every eigenvector is `eigen_generators ⊗ v`.
    pub eigen_generators: TropMatrix,
}

/// λ = ⊕ₘ tr^{1/m}(Aᵐ), the maximum cycle mean of the precedence digraph.
pub fn eigenvalue(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.require_square()?;
    linalg::require_irreducible(a)?;
    let mut power = a.clone();
    let mut lambda = TropScalar::ZERO;
    for m in 1..=n {
        if m > 1 {
            power = power.mul(a)?;
        }
        let root = linalg::trace(&power)?.pow(Exponent::new(1, m as i64))?;
        lambda = lambda.oplus(root);
    }
    Ok(lambda)
}

/// Eigenvalue and eigenvector generators A_λ⁺.
pub fn eigenvectors(a: &TropMatrix, tol: Tolerance) -> Result<SpectralOutcome> {
    let lambda = eigenvalue(a)?;
    let scaled = a.scale(lambda.inv()?);
    Ok(SpectralOutcome {
        lambda,
        eigen_generators: linalg::generator(&scaled, tol)?,
    })
}
