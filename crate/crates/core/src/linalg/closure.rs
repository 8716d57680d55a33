//! Traces, Kleene closures and the generator matrix A⁺.

use super::{TropMatrix, TropVector};
use crate::error::{AlgebraError, Result};
use crate::scalar::{Tolerance, TropScalar};

/// tr A = ⊕ᵢ aᵢᵢ.
pub fn trace(a: &TropMatrix) -> Result<TropScalar> {
    a.require_square()?;
    Ok(a.diagonal().fold(TropScalar::ZERO, TropScalar::oplus))
}

/// Tr(A) = ⊕ₘ tr Aᵐ for m = 1..n.
///
/// Its position relative to 𝟙 tells whether the precedence digraph has a
/// positive cycle, only cycles of weight at most zero, or strictly negative
/// cycles.
pub fn big_trace(a: &TropMatrix) -> Result<TropScalar> {
    let n = a.require_square()?;
    let mut power = a.clone();
    let mut acc = trace(&power)?;
    for _ in 1..n {
        power = power.mul(a)?;
        acc = acc.oplus(trace(&power)?);
    }
    Ok(acc)
}

/// A* = I ⊕ A ⊕ ⋯ ⊕ Aⁿ⁻¹, computed as (I ⊕ A)ⁿ⁻¹ by repeated squaring.
pub fn star(a: &TropMatrix) -> Result<TropMatrix> {
    let n = a.require_square()?;
    TropMatrix::identity(n).oplus(a)?.power(n - 1)
}

/// A^× = A ⊕ ⋯ ⊕ Aⁿ = A ⊗ A*.
pub fn plus_powers(a: &TropMatrix) -> Result<TropMatrix> {
    a.mul(&star(a)?)
}

/// Whether `c` is a max-plus combination of the columns of `s`.
///
/// The greatest coefficient vector with S⊗v ≤ c is (c⁻S)⁻; `c` lies in the
/// span exactly when that vector reaches it.
pub fn is_dependent(c: &TropVector, s: &TropMatrix, tol: Tolerance) -> Result<bool> {
    let coeffs = s.max_subsolution(c)?;
    Ok(s.apply(&coeffs)?.approx_eq(c, tol))
}

/// Generator matrix A⁺.
///
/// Takes the columns of A^× whose diagonal entry is 𝟙 (within `tol`),
/// scans them left to right keeping each column that is independent of the
/// columns kept so far, then sweeps the kept set right to left and drops any
/// column that depends on the remaining ones. Each kept column is finally
/// scaled so that its last non-zero entry is 𝟙.
pub fn generator(a: &TropMatrix, tol: Tolerance) -> Result<TropMatrix> {
    let n = a.require_square()?;
    let closure = plus_powers(a)?;
    let candidates: Vec<TropVector> = (0..n)
        .filter(|&j| closure.get(j, j).approx_eq(TropScalar::ONE, tol))
        .map(|j| closure.column(j))
        .collect();
    if candidates.is_empty() {
        return Err(AlgebraError::NoUnitDiagonalColumn);
    }

    let mut kept: Vec<TropVector> = Vec::with_capacity(candidates.len());
    for c in candidates {
        if kept.is_empty() || !is_dependent(&c, &TropMatrix::from_columns(&kept)?, tol)? {
            kept.push(c);
        }
    }

    let mut idx = kept.len();
    while idx > 0 && kept.len() > 1 {
        idx -= 1;
        let others: Vec<TropVector> = kept
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, c)| c.clone())
            .collect();
        if is_dependent(&kept[idx], &TropMatrix::from_columns(&others)?, tol)? {
            kept.remove(idx);
        }
    }

    let normalized: Vec<TropVector> = kept
        .iter()
        .map(|c| {
            let last = c
                .iter()
                .rev()
                .find(|x| !x.is_zero())
                .expect("unit-diagonal column has a non-zero entry");
            c.scale(last.inv().expect("non-zero entry is invertible"))
        })
        .collect();
    TropMatrix::from_columns(&normalized)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: f64 = f64::NEG_INFINITY;

    fn ss_matrix() -> TropMatrix {
        TropMatrix::from_ieee_rows(&[
            [0.0, -2.0, Z, Z],
            [Z, 0.0, 3.0, -1.0],
            [-1.0, Z, 0.0, -4.0],
            [2.0, Z, Z, 0.0],
        ])
        .unwrap()
    }

    fn ss_closure() -> TropMatrix {
        TropMatrix::from_ieee_rows(&[
            [0.0, -2.0, 1.0, -3.0],
            [2.0, 0.0, 3.0, -1.0],
            [-1.0, -3.0, 0.0, -4.0],
            [2.0, 0.0, 3.0, 0.0],
        ])
        .unwrap()
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(&ss_matrix()).unwrap(), TropScalar::ONE);
        assert_eq!(trace(&TropMatrix::identity(3)).unwrap(), TropScalar::ONE);
        assert_eq!(trace(&TropMatrix::zeros(2, 2)).unwrap(), TropScalar::ZERO);
        assert!(matches!(
            trace(&TropMatrix::zeros(2, 3)),
            Err(AlgebraError::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn big_trace_examples() {
        assert_eq!(big_trace(&ss_matrix()).unwrap(), TropScalar::ONE);
        let diag = TropMatrix::from_ieee_rows(&[[-1.0, Z], [Z, -2.0]]).unwrap();
        assert_eq!(big_trace(&diag).unwrap(), TropScalar::finite(-1.0));
        let acyclic = TropMatrix::from_ieee_rows(&[[Z, 3.0], [Z, Z]]).unwrap();
        assert_eq!(big_trace(&acyclic).unwrap(), TropScalar::ZERO);
    }

    #[test]
    fn star_examples() {
        let a = ss_matrix();
        assert_eq!(star(&a).unwrap(), ss_closure());
        assert_eq!(plus_powers(&a).unwrap(), ss_closure());
        assert_eq!(
            star(&TropMatrix::zeros(3, 3)).unwrap(),
            TropMatrix::identity(3)
        );
        assert!(plus_powers(&TropMatrix::zeros(3, 3)).unwrap().is_zero());
        assert_eq!(
            star(&TropMatrix::zeros(1, 1)).unwrap(),
            TropMatrix::identity(1)
        );
    }

    #[test]
    fn generator_start_to_start_example() {
        let expected =
            TropMatrix::from_ieee_rows(&[[-2.0, -3.0], [0.0, -1.0], [-3.0, -4.0], [0.0, 0.0]])
                .unwrap();
        assert_eq!(
            generator(&ss_matrix(), Tolerance::DEFAULT).unwrap(),
            expected
        );
    }

    #[test]
    fn generator_scaled_eigen_example() {
        let a_lambda =
            TropMatrix::from_ieee_rows(&[[-2.0, 0.0, 0.0], [-2.0, -1.0, 1.0], [-1.0, -2.0, -1.0]])
                .unwrap();
        let expected_closure =
            TropMatrix::from_ieee_rows(&[[0.0, 0.0, 1.0], [0.0, 0.0, 1.0], [-1.0, -1.0, 0.0]])
                .unwrap();
        assert_eq!(star(&a_lambda).unwrap(), expected_closure);
        assert_eq!(plus_powers(&a_lambda).unwrap(), expected_closure);
        let g = generator(&a_lambda, Tolerance::DEFAULT).unwrap();
        assert_eq!(
            g,
            TropMatrix::from_ieee_rows(&[[1.0], [1.0], [0.0]]).unwrap()
        );
    }

    #[test]
    fn generator_of_identity_is_identity() {
        let i = TropMatrix::identity(2);
        assert_eq!(generator(&i, Tolerance::DEFAULT).unwrap(), i);
    }

    #[test]
    fn generator_without_unit_diagonal() {
        let a = TropMatrix::from_ieee_rows(&[[-1.0, Z], [0.0, -3.0]]).unwrap();
        assert_eq!(
            generator(&a, Tolerance::DEFAULT),
            Err(AlgebraError::NoUnitDiagonalColumn)
        );
    }

    #[test]
    fn dependence_examples() {
        let x = ss_closure();
        let s = TropMatrix::from_columns(&[x.column(2)]).unwrap();
        assert!(is_dependent(&x.column(0), &s, Tolerance::DEFAULT).unwrap());

        let col = TropVector::from_finite(&[1.0, -2.0, 4.0]);
        let s = TropMatrix::from_columns(std::slice::from_ref(&col)).unwrap();
        let shifted = col.scale(TropScalar::finite(2.5));
        assert!(is_dependent(&shifted, &s, Tolerance::DEFAULT).unwrap());

        let s = TropMatrix::from_columns(&[x.column(0)]).unwrap();
        assert!(!is_dependent(&x.column(3), &s, Tolerance::DEFAULT).unwrap());
    }

    #[test]
    fn zero_vector_depends_on_anything() {
        let s = TropMatrix::from_ieee_rows(&[[1.0], [2.0]]).unwrap();
        assert!(is_dependent(&TropVector::zeros(2), &s, Tolerance::DEFAULT).unwrap());
    }
}
