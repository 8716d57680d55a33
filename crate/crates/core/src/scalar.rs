//! Scalars of the idempotent semifield (ℝ ∪ {−∞}, max, +).
//!
//! The semiring zero is an explicit tag rather than `f64::NEG_INFINITY`, so
//! products with zero never touch IEEE infinities. Conversion to and from
//! `−∞` only happens at the I/O boundary ([`TropScalar::from_ieee`],
//! [`TropScalar::to_ieee`], and the serde impls where zero is `null`).

use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{AlgebraError, Result};

/// Rational exponent for [`TropScalar::pow`].
pub type Exponent = Rational64;

/// Absolute tolerance used when a computed scalar is compared with a target
/// such as 𝟙.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(AlgebraError::NonFinite(eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// An element of ℝ_max,+: either the semiring zero 𝟘 = −∞ or a finite real.
#[derive(Clone, Copy, Default)]
pub struct TropScalar(Option<f64>);

impl TropScalar {
    /// 𝟘, the additive neutral and multiplicative absorber.
    pub const ZERO: TropScalar = TropScalar(None);
    /// 𝟙 = 0, the multiplicative identity.
    pub const ONE: TropScalar = TropScalar(Some(0.0));

    /// Finite scalar; rejects NaN and infinities.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() {
            // normalise −0.0 so that equality and hashing of 0 agree
            Ok(TropScalar(Some(value + 0.0)))
        } else {
            Err(AlgebraError::NonFinite(value))
        }
    }

    /// Finite scalar from a literal.
    ///
    /// # Panics
    ///
    /// Panics if `value` is not finite.
    pub fn finite(value: f64) -> Self {
        Self::new(value).expect("finite scalar literal")
    }

    /// Boundary conversion: `−∞` maps to 𝟘, other non-finite values are rejected.
    pub fn from_ieee(value: f64) -> Result<Self> {
        if value == f64::NEG_INFINITY {
            Ok(Self::ZERO)
        } else {
            Self::new(value)
        }
    }

    pub fn to_ieee(self) -> f64 {
        self.0.unwrap_or(f64::NEG_INFINITY)
    }

    pub fn is_zero(self) -> bool {
        self.0.is_none()
    }

    pub fn value(self) -> Option<f64> {
        self.0
    }

    /// a ⊕ b = max(a, b).
    pub fn oplus(self, other: Self) -> Self {
        match (self.0, other.0) {
            (None, _) => other,
            (_, None) => self,
            (Some(a), Some(b)) => TropScalar(Some(a.max(b))),
        }
    }

    /// a ⊗ b = a + b, absorbing on 𝟘.
    pub fn otimes(self, other: Self) -> Self {
        match (self.0, other.0) {
            (Some(a), Some(b)) => TropScalar(Some(a + b)),
            _ => Self::ZERO,
        }
    }

    /// Multiplicative inverse a⁻¹ = −a.
    pub fn inv(self) -> Result<Self> {
        match self.0 {
            Some(a) => Ok(TropScalar(Some(-a + 0.0))),
            None => Err(AlgebraError::InversionOfZero),
        }
    }

    /// Rational power a^q, which is q·a in conventional arithmetic.
    pub fn pow(self, q: Exponent) -> Result<Self> {
        match self.0 {
            Some(a) => {
                let num = *q.numer() as f64;
                let den = *q.denom() as f64;
                Ok(TropScalar(Some(a * num / den + 0.0)))
            }
            None if q > Exponent::from_integer(0) => Ok(Self::ZERO),
            None => Err(AlgebraError::ZeroToNonpositivePower(q.to_string())),
        }
    }

    /// Order induced by ⊕: a ≤ b iff a ⊕ b = b.
    pub fn leq(self, other: Self) -> bool {
        self <= other
    }

    /// Equality within an absolute tolerance; 𝟘 only matches 𝟘.
    pub fn approx_eq(self, other: Self, tol: Tolerance) -> bool {
        match (self.0, other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => (a - b).abs() <= tol.0,
            _ => false,
        }
    }

    /// a ≤ b up to tolerance.
    pub fn approx_leq(self, other: Self, tol: Tolerance) -> bool {
        match (self.0, other.0) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a <= b + tol.0,
        }
    }

    /// Ordinary difference a − b of two finite scalars.
    pub(crate) fn minus(self, other: Self) -> Option<f64> {
        Some(self.0? - other.0?)
    }
}

impl PartialEq for TropScalar {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for TropScalar {}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.0, other.0) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            // NaN is unrepresentable
            (Some(a), Some(b)) => a.partial_cmp(&b).unwrap(),
        }
    }
}

impl fmt::Debug for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            None => f.write_str("-inf"),
            Some(v) => {
                let v = round_significant(v);
                if let Some(p) = f.precision() {
                    write!(f, "{v:.p$}")
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}

impl From<i32> for TropScalar {
    fn from(v: i32) -> Self {
        TropScalar(Some(v as f64))
    }
}

impl TryFrom<f64> for TropScalar {
    type Error = AlgebraError;

    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

/// Round to 12 significant digits, the precision used in all textual output.
pub fn round_significant(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v + 0.0;
    }
    let s = format!("{v:.11e}");
    s.parse::<f64>().unwrap_or(v) + 0.0
}

impl Serialize for TropScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            None => serializer.serialize_none(),
            Some(v) => {
                let v = round_significant(v);
                if v.fract() == 0.0 && v.abs() < 1e15 {
                    serializer.serialize_i64(v as i64)
                } else {
                    serializer.serialize_f64(v)
                }
            }
        }
    }
}

impl<'de> Deserialize<'de> for TropScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = TropScalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a finite number or null")
            }

            fn visit_none<E: de::Error>(self) -> std::result::Result<TropScalar, E> {
                Ok(TropScalar::ZERO)
            }

            fn visit_unit<E: de::Error>(self) -> std::result::Result<TropScalar, E> {
                Ok(TropScalar::ZERO)
            }

            fn visit_some<D: Deserializer<'de>>(
                self,
                d: D,
            ) -> std::result::Result<TropScalar, D::Error> {
                d.deserialize_any(self)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<TropScalar, E> {
                TropScalar::new(v as f64).map_err(E::custom)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<TropScalar, E> {
                TropScalar::new(v as f64).map_err(E::custom)
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<TropScalar, E> {
                TropScalar::new(v).map_err(E::custom)
            }
        }

        deserializer.deserialize_option(ScalarVisitor)
    }
}
