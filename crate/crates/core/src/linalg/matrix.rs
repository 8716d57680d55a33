use std::fmt;

use serde::{Deserialize, Serialize};

use super::TropVector;
use crate::error::{AlgebraError, Result};
use crate::scalar::{Tolerance, TropScalar};

/// Dense row-major max-plus matrix, at least 1×1.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<TropScalar>>", into = "Vec<Vec<TropScalar>>")]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(AlgebraError::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(AlgebraError::RaggedRows {
                    row: i,
                    expected: n_cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(TropMatrix {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    /// Matrix from IEEE rows where `−∞` stands for 𝟘.
    pub fn from_ieee_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&v| TropScalar::from_ieee(v))
                    .collect()
            })
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::from_rows(rows)
    }

    pub fn from_columns(columns: &[TropVector]) -> Result<Self> {
        let first = columns.first().ok_or(AlgebraError::EmptyMatrix)?;
        let rows = first.len();
        for c in columns {
            if c.len() != rows {
                return Err(AlgebraError::DimensionMismatch {
                    context: "matrix columns",
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        let cols = columns.len();
        let mut data = vec![TropScalar::ZERO; rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                data[i * cols + j] = *x;
            }
        }
        Ok(TropMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        TropMatrix {
            rows,
            cols,
            data: vec![TropScalar::ZERO; rows * cols],
        }
    }

    /// I: 𝟙 on the diagonal, 𝟘 elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = TropScalar::ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> TropScalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: TropScalar) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .expect("matrix row is non-empty")
    }

    pub fn column(&self, j: usize) -> TropVector {
        TropVector::new((0..self.rows).map(|i| self.get(i, j)).collect())
            .expect("matrix column is non-empty")
    }

    pub fn columns(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<TropScalar>> {
        self.data.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn to_ieee_rows(&self) -> Vec<Vec<f64>> {
        self.data
            .chunks(self.cols)
            .map(|r| r.iter().map(|x| x.to_ieee()).collect())
            .collect()
    }

    /// No row is entirely 𝟘.
    pub fn is_regular(&self) -> bool {
        self.data
            .chunks(self.cols)
            .all(|r| r.iter().any(|x| !x.is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(AlgebraError::DimensionMismatch {
                context: "matrix sum",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.oplus(*b))
                .collect(),
        })
    }

    /// Scalar multiple αA.
    pub fn scale(&self, alpha: TropScalar) -> Self {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.otimes(alpha)).collect(),
        }
    }

    /// Matrix product, {AB}ᵢⱼ = ⊕ₖ aᵢₖbₖⱼ.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
                let b_row = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o = o.oplus(a.otimes(*b));
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product A⊗x.
    pub fn apply(&self, x: &TropVector) -> Result<TropVector> {
        if self.cols != x.len() {
            return Err(AlgebraError::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: x.len(),
            });
        }
        let out = self
            .data
            .chunks(self.cols)
            .map(|r| {
                r.iter()
                    .zip(x)
                    .fold(TropScalar::ZERO, |acc, (a, b)| acc.oplus(a.otimes(*b)))
            })
            .collect();
        TropVector::new(out)
    }

    /// Row-vector product x⊗A, with `x` read as a row.
    pub fn left_mul(&self, x: &TropVector) -> Result<TropVector> {
        if self.rows != x.len() {
            return Err(AlgebraError::DimensionMismatch {
                context: "row-vector product",
                expected: self.rows,
                found: x.len(),
            });
        }
        let out = (0..self.cols)
            .map(|j| {
                (0..self.rows).fold(TropScalar::ZERO, |acc, i| {
                    acc.oplus(x[i].otimes(self.get(i, j)))
                })
            })
            .collect();
        TropVector::new(out)
    }

    /// Integer power Aᵏ with A⁰ = I, by binary exponentiation.
    pub fn power(&self, k: usize) -> Result<Self> {
        self.require_square()?;
        let mut result = Self::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Greatest x with A⊗x ≤ d.
    ///
    /// For regular `d` this is (d⁻A)⁻. An entry of `d` equal to 𝟘 forces
    /// every variable it constrains to 𝟘; a variable that appears in no row
    /// is unconstrained and is reported as 𝟘, matching (d⁻A)⁻.
    pub fn max_subsolution(&self, d: &TropVector) -> Result<TropVector> {
        if self.rows != d.len() {
            return Err(AlgebraError::DimensionMismatch {
                context: "residuation",
                expected: self.rows,
                found: d.len(),
            });
        }
        let out = (0..self.cols)
            .map(|j| {
                let mut bound: Option<TropScalar> = None;
                for i in 0..self.rows {
                    let a = self.get(i, j);
                    if a.is_zero() {
                        continue;
                    }
                    let candidate = match d[i].minus(a) {
                        Some(v) => TropScalar::finite(v),
                        None => TropScalar::ZERO,
                    };
                    bound = Some(bound.map_or(candidate, |b| b.min(candidate)));
                }
                bound.unwrap_or(TropScalar::ZERO)
            })
            .collect();
        TropVector::new(out)
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(*b, tol))
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub(crate) fn diagonal(&self) -> impl Iterator<Item = TropScalar> + '_ {
        (0..self.rows.min(self.cols)).map(move |i| self.get(i, i))
    }
}

impl TryFrom<Vec<Vec<TropScalar>>> for TropMatrix {
    type Error = AlgebraError;

    fn try_from(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<TropMatrix> for Vec<Vec<TropScalar>> {
    fn from(m: TropMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}
