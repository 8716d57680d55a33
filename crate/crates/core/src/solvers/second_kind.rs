//! Second-kind (Bellman) systems A⊗x ⊕ b = x and A⊗x ⊕ b ≤ x for
//! irreducible A.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, TropMatrix, TropVector};
use crate::scalar::{Tolerance, TropScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BellmanClass {
    /// Tr(A) < 𝟙, b ≠ 𝟘: the only solution is A*b.
    UniqueSolution,
    /// Tr(A) = 𝟙 (or, for the inequality, Tr(A) ≤ 𝟙).
    SolutionFamily,
    /// b = 𝟘 and only x = 𝟘 solves.
    OnlyTrivial,
    /// Tr(A) > 𝟙 and b ≠ 𝟘.
    NoSolution,
}

/// Solution set of a Bellman equation or inequality.
///
/// For the equation the family is `particular ⊕ generators⊗v`; for the
/// inequality `generators` is A* and the family is A*(b ⊕ v), which equals
/// `particular ⊕ generators⊗v`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BellmanOutcome {
    pub big_trace: TropScalar,
    pub classification: BellmanClass,
    pub particular: Option<TropVector>,
    pub generators: Option<TropMatrix>,
}

impl BellmanOutcome {
    /// particular ⊕ generators⊗v, when the outcome is a family.
    pub fn member(&self, v: &TropVector) -> Result<Option<TropVector>> {
        let (Some(p), Some(g)) = (&self.particular, &self.generators) else {
            return Ok(None);
        };
        Ok(Some(p.oplus(&g.apply(v)?)?))
    }
}

/// Position of Tr(A) relative to 𝟙; 𝟘 counts as below.
pub(crate) fn compare_with_one(x: TropScalar, tol: Tolerance) -> Ordering {
    if x.approx_eq(TropScalar::ONE, tol) {
        Ordering::Equal
    } else {
        x.cmp(&TropScalar::ONE)
    }
}

fn prepare(a: &TropMatrix, b: &TropVector) -> Result<TropScalar> {
    let n = a.require_square()?;
    if b.len() != n {
        return Err(AlgebraError::DimensionMismatch {
            context: "Bellman system",
            expected: n,
            found: b.len(),
        });
    }
    linalg::require_irreducible(a)?;
    linalg::big_trace(a)
}

/// Solves A⊗x ⊕ b = x following the Tr(A) trichotomy.
pub fn solve_bellman(a: &TropMatrix, b: &TropVector, tol: Tolerance) -> Result<BellmanOutcome> {
    let tr = prepare(a, b)?;
    let n = a.rows();
    let homogeneous = b.is_zero();
    let outcome = match (compare_with_one(tr, tol), homogeneous) {
        (Ordering::Equal, _) => BellmanOutcome {
            big_trace: tr,
            classification: BellmanClass::SolutionFamily,
            particular: Some(linalg::star(a)?.apply(b)?),
            generators: Some(linalg::generator(a, tol)?),
        },
        (_, true) => BellmanOutcome {
            big_trace: tr,
            classification: BellmanClass::OnlyTrivial,
            particular: Some(TropVector::zeros(n)),
            generators: None,
        },
        (Ordering::Less, false) => BellmanOutcome {
            big_trace: tr,
            classification: BellmanClass::UniqueSolution,
            particular: Some(linalg::star(a)?.apply(b)?),
            generators: None,
        },
        (Ordering::Greater, false) => BellmanOutcome {
            big_trace: tr,
            classification: BellmanClass::NoSolution,
            particular: None,
            generators: None,
        },
    };
    Ok(outcome)
}

/// Solves A⊗x ⊕ b ≤ x. When Tr(A) ≤ 𝟙 the least solution is A*b and every
/// solution is A*(b ⊕ v).
pub fn solve_bellman_inequality(
    a: &TropMatrix,
    b: &TropVector,
    tol: Tolerance,
) -> Result<BellmanOutcome> {
    let tr = prepare(a, b)?;
    if compare_with_one(tr, tol) != Ordering::Greater {
        let closure = linalg::star(a)?;
        return Ok(BellmanOutcome {
            big_trace: tr,
            classification: BellmanClass::SolutionFamily,
            particular: Some(closure.apply(b)?),
            generators: Some(closure),
        });
    }
    let (classification, particular) = if b.is_zero() {
        (BellmanClass::OnlyTrivial, Some(TropVector::zeros(a.rows())))
    } else {
        (BellmanClass::NoSolution, None)
    };
    Ok(BellmanOutcome {
        big_trace: tr,
        classification,
        particular,
        generators: None,
    })
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

    fn expected_generators() -> TropMatrix {
        TropMatrix::from_ieee_rows(&[[-2.0, -3.0], [0.0, -1.0], [-3.0, -4.0], [0.0, 0.0]]).unwrap()
    }

    fn check_bellman(a: &TropMatrix, b: &TropVector, x: &TropVector) {
        assert_eq!(&a.apply(x).unwrap().oplus(b).unwrap(), x);
    }

    #[test]
    fn homogeneous_family() {
        let out = solve_bellman(&ss_matrix(), &TropVector::zeros(4), Tolerance::DEFAULT).unwrap();
        assert_eq!(out.classification, BellmanClass::SolutionFamily);
        assert_eq!(out.big_trace, TropScalar::ONE);
        assert_eq!(out.generators, Some(expected_generators()));
        assert!(out.particular.as_ref().unwrap().is_zero());
    }

    #[test]
    fn nonhomogeneous_family() {
        let a = ss_matrix();
        let b = TropVector::from_finite(&[1.0, 1.0, 2.0, 1.0]);
        let out = solve_bellman(&a, &b, Tolerance::DEFAULT).unwrap();
        assert_eq!(out.classification, BellmanClass::SolutionFamily);
        assert_eq!(
            out.particular,
            Some(TropVector::from_finite(&[3.0, 5.0, 2.0, 5.0]))
        );
        assert_eq!(out.generators, Some(expected_generators()));
        for v in [[0.0, 0.0], [10.0, -3.0], [-1.0, 8.0]] {
            let x = out.member(&TropVector::from_finite(&v)).unwrap().unwrap();
            check_bellman(&a, &b, &x);
        }
    }

    #[test]
    fn negative_cycle_gives_unique_solution() {
        // single cycle 1 → 2 → 3 → 1 of weight −1, no self-loops
        let a = TropMatrix::from_ieee_rows(&[[Z, Z, 0.0], [1.0, Z, Z], [Z, -2.0, Z]]).unwrap();
        let b = TropVector::from_finite(&[0.0, 5.0, -3.0]);
        let out = solve_bellman(&a, &b, Tolerance::DEFAULT).unwrap();
        assert_eq!(out.big_trace, TropScalar::finite(-1.0));
        assert_eq!(out.classification, BellmanClass::UniqueSolution);
        let x = out.particular.unwrap();
        check_bellman(&a, &b, &x);

        let homog = solve_bellman(&a, &TropVector::zeros(3), Tolerance::DEFAULT).unwrap();
        assert_eq!(homog.classification, BellmanClass::OnlyTrivial);
    }

    #[test]
    fn positive_cycle() {
        let a = TropMatrix::from_ieee_rows(&[[1.0, 0.0], [0.0, Z]]).unwrap();
        let out = solve_bellman(
            &a,
            &TropVector::from_finite(&[0.0, 0.0]),
            Tolerance::DEFAULT,
        )
        .unwrap();
        assert_eq!(out.classification, BellmanClass::NoSolution);
        assert!(out.particular.is_none());
        let out = solve_bellman(&a, &TropVector::zeros(2), Tolerance::DEFAULT).unwrap();
        assert_eq!(out.classification, BellmanClass::OnlyTrivial);
        let ineq = solve_bellman_inequality(
            &a,
            &TropVector::from_ieee(&[Z, 1.0]).unwrap(),
            Tolerance::DEFAULT,
        )
        .unwrap();
        assert_eq!(ineq.classification, BellmanClass::NoSolution);
    }

    #[test]
    fn reducible_rejected() {
        let a = TropMatrix::from_ieee_rows(&[[0.0, 1.0], [Z, 0.0]]).unwrap();
        assert!(matches!(
            solve_bellman(&a, &TropVector::zeros(2), Tolerance::DEFAULT),
            Err(AlgebraError::ReducibleMatrix { .. })
        ));
        assert!(matches!(
            solve_bellman_inequality(&a, &TropVector::zeros(2), Tolerance::DEFAULT),
            Err(AlgebraError::ReducibleMatrix { .. })
        ));
        assert!(matches!(
            solve_bellman(&ss_matrix(), &TropVector::zeros(3), Tolerance::DEFAULT),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inequality_minimal_element() {
        let a = ss_matrix();
        let b = TropVector::from_finite(&[1.0, 1.0, 2.0, 1.0]);
        let out = solve_bellman_inequality(&a, &b, Tolerance::DEFAULT).unwrap();
        let x = out.particular.clone().unwrap();
        assert_eq!(x, TropVector::from_finite(&[3.0, 5.0, 2.0, 5.0]));
        assert!(a
            .apply(&x)
            .unwrap()
            .oplus(&b)
            .unwrap()
            .approx_leq(&x, Tolerance::DEFAULT));
        assert_eq!(out.generators, Some(linalg::star(&a).unwrap()));
    }

    #[test]
    fn inequality_homogeneous_unit_vectors() {
        let a = ss_matrix();
        let out = solve_bellman_inequality(&a, &TropVector::zeros(4), Tolerance::DEFAULT).unwrap();
        assert_eq!(out.classification, BellmanClass::SolutionFamily);
        for k in 0..4 {
            let mut e = vec![f64::NEG_INFINITY; 4];
            e[k] = 0.0;
            let x = out
                .member(&TropVector::from_ieee(&e).unwrap())
                .unwrap()
                .unwrap();
            assert!(a.apply(&x).unwrap().approx_leq(&x, Tolerance::DEFAULT));
        }
    }
}
