use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::scalar::{Tolerance, TropScalar};

/// A max-plus vector with at least one entry.
///
/// Orientation is implied by use: [`TropVector::conjugate`] produces the
/// row vector x⁻, and [`super::TropMatrix::left_mul`] consumes row vectors.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<TropScalar>", into = "Vec<TropScalar>")]
pub struct TropVector(Vec<TropScalar>);

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(AlgebraError::IrregularInput(
                "vector must have at least one entry".into(),
            ));
        }
        Ok(TropVector(entries))
    }

    /// Vector of finite entries.
    ///
    /// # Panics
    ///
    /// Panics on an empty slice or a non-finite entry.
    pub fn from_finite(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&v| TropScalar::finite(v)).collect())
            .expect("non-empty vector literal")
    }

    /// Vector from IEEE values where `−∞` stands for 𝟘.
    pub fn from_ieee(values: &[f64]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&v| TropScalar::from_ieee(v))
                .collect::<Result<_>>()?,
        )
    }

    /// The zero vector 𝟘 of length `n`.
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "vector length must be positive");
        TropVector(vec![TropScalar::ZERO; n])
    }

    /// The vector with every entry 𝟙.
    pub fn ones(n: usize) -> Self {
        assert!(n > 0, "vector length must be positive");
        TropVector(vec![TropScalar::ONE; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TropScalar> {
        self.0.iter()
    }

    pub fn to_ieee(&self) -> Vec<f64> {
        self.0.iter().map(|x| x.to_ieee()).collect()
    }

    /// No entry is 𝟘.
    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|x| !x.is_zero())
    }

    /// Every entry is 𝟘.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector sum")?;
        Ok(TropVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.oplus(*b))
                .collect(),
        ))
    }

    /// Scalar multiple αx.
    pub fn scale(&self, alpha: TropScalar) -> Self {
        TropVector(self.0.iter().map(|x| x.otimes(alpha)).collect())
    }

    /// Conjugate x⁻: inverse of every non-zero entry, 𝟘 kept as 𝟘.
    pub fn conjugate(&self) -> Self {
        TropVector(
            self.0
                .iter()
                .map(|x| x.inv().unwrap_or(TropScalar::ZERO))
                .collect(),
        )
    }

    /// Inner product x⊗y = ⊕ᵢ xᵢyᵢ, with `self` read as a row.
    pub fn dot(&self, other: &Self) -> Result<TropScalar> {
        self.check_len(other, "inner product")?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(TropScalar::ZERO, |acc, (a, b)| acc.oplus(a.otimes(*b))))
    }

    /// Largest entry, ⊕ᵢ xᵢ.
    pub fn sum(&self) -> TropScalar {
        self.0.iter().fold(TropScalar::ZERO, |acc, x| acc.oplus(*x))
    }

    /// ρ(a, b) = b⁻a ⊕ a⁻b, the Chebyshev distance of two regular vectors.
    pub fn metric(&self, other: &Self) -> Result<TropScalar> {
        self.check_len(other, "metric")?;
        if !self.is_regular() || !other.is_regular() {
            return Err(AlgebraError::IrregularInput(
                "metric is defined for regular vectors only".into(),
            ));
        }
        Ok(other
            .conjugate()
            .dot(self)?
            .oplus(self.conjugate().dot(other)?))
    }

    /// Entry-wise comparison a ≤ b within tolerance.
    pub fn approx_leq(&self, other: &Self, tol: Tolerance) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| a.approx_leq(*b, tol))
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(&other.0)
                .all(|(a, b)| a.approx_eq(*b, tol))
    }

    fn check_len(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.len() != other.len() {
            return Err(AlgebraError::DimensionMismatch {
                context,
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for TropVector {
    type Output = TropScalar;

    fn index(&self, i: usize) -> &TropScalar {
        &self.0[i]
    }
}

impl TryFrom<Vec<TropScalar>> for TropVector {
    type Error = AlgebraError;

    fn try_from(v: Vec<TropScalar>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<TropVector> for Vec<TropScalar> {
    fn from(v: TropVector) -> Self {
        v.0
    }
}

impl<'a> IntoIterator for &'a TropVector {
    type Item = &'a TropScalar;
    type IntoIter = std::slice::Iter<'a, TropScalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}
