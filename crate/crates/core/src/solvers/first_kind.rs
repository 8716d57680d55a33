//! First-kind systems A⊗x = d and A⊗x ≤ d.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::{Exponent, Tolerance, TropScalar};

/// Everything known about A⊗x = d for regular A and d.
///
/// `under_solution` is (d⁻A)⁻, the largest x with A⊗x ≤ d. The other two
/// are its shifts by Δ^{1/2} and Δ. Each `*_image` is A⊗x for the
/// corresponding x.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FirstKindOutcome {
    pub delta: TropScalar,
    pub exact_max_solution: Option<TropVector>,
    pub quasi_solution: TropVector,
    pub quasi_image: TropVector,
    pub under_solution: TropVector,
    pub under_image: TropVector,
    pub over_solution: TropVector,
    pub over_image: TropVector,
}

impl FirstKindOutcome {
    pub fn is_exact(&self) -> bool {
        self.exact_max_solution.is_some()
    }
}

fn check_regular(a: &TropMatrix, d: &TropVector) -> Result<()> {
    if a.rows() != d.len() {
        return Err(AlgebraError::DimensionMismatch {
            context: "first-kind system",
            expected: a.rows(),
            found: d.len(),
        });
    }
    if !a.is_regular() {
        return Err(AlgebraError::IrregularInput("matrix has a zero row".into()));
    }
    if !d.is_regular() {
        return Err(AlgebraError::IrregularInput(
            "right-hand side has a zero entry".into(),
        ));
    }
    Ok(())
}

/// Δ = (A(d⁻A)⁻)⁻d. Always ≥ 𝟙; equal to 𝟙 iff A⊗x = d is solvable.
pub fn residual(a: &TropMatrix, d: &TropVector) -> Result<TropScalar> {
    check_regular(a, d)?;
    let x1 = a.max_subsolution(d)?;
    a.apply(&x1)?.conjugate().dot(d)
}

/// Closed-form solution of A⊗x = d with the approximate solutions used
/// when the system is inconsistent.
pub fn solve_first_kind(
    a: &TropMatrix,
    d: &TropVector,
    tol: Tolerance,
) -> Result<FirstKindOutcome> {
    check_regular(a, d)?;
    let under_solution = a.max_subsolution(d)?;
    let under_image = a.apply(&under_solution)?;
    let delta = under_image.conjugate().dot(d)?;

    let half = delta.pow(Exponent::new(1, 2))?;
    let quasi_solution = under_solution.scale(half);
    let over_solution = under_solution.scale(delta);
    let quasi_image = a.apply(&quasi_solution)?;
    let over_image = a.apply(&over_solution)?;

    let exact_max_solution = delta
        .approx_eq(TropScalar::ONE, tol)
        .then(|| under_solution.clone());

    Ok(FirstKindOutcome {
        delta,
        exact_max_solution,
        quasi_solution,
        quasi_image,
        under_solution,
        under_image,
        over_solution,
        over_image,
    })
}

/// Greatest solution (d⁻A)⁻ of A⊗x ≤ d; the solution set is every x below it.
pub fn solve_first_kind_inequality(a: &TropMatrix, d: &TropVector) -> Result<TropVector> {
    a.max_subsolution(d)
}
