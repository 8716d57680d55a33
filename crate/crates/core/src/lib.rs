//! Max-plus linear algebra and project scheduling.
//!
//! Works over the idempotent semifield ℝ_max,+ = (ℝ ∪ {−∞}, max, +), where
//! 𝟘 = −∞ and 𝟙 = 0. Precedence constraints between project activities
//! are linear in this semiring:
//!
//! * Start-to-Finish lags with due dates give A⊗x = d, solved through the
//!   residual Δ = (A(d⁻A)⁻)⁻d ([`solvers::solve_first_kind`]);
//! * Start-to-Start lags with early starts give the Bellman equation
//!   A⊗x ⊕ b = x ([`solvers::solve_bellman`]);
//! * minimising the maximum flow time is the eigenproblem A⊗x = λ⊗x
//!   ([`solvers::eigenvectors`]).
//!
//! [`scheduling`] maps project data onto these systems and [`format`]
//! reads the JSON problem files used by the command-line tool.
//!
//! ```
//! use maxplus::{scheduling, Tolerance, TropMatrix, TropVector};
//!
//! let z = f64::NEG_INFINITY;
//! let sf = TropMatrix::from_ieee_rows(&[
//!     [8.0, 10.0, z, z],
//!     [z, 5.0, 4.0, 8.0],
//!     [6.0, 12.0, 11.0, 7.0],
//!     [z, z, z, 12.0],
//! ])?;
//! let due = TropVector::from_finite(&[14.0, 11.0, 16.0, 15.0]);
//! let schedule = scheduling::latest_start_sf(&sf, &due, Tolerance::DEFAULT)?;
//! assert_eq!(schedule.initiation, TropVector::from_finite(&[6.0, 4.0, 5.0, 3.0]));
//! # Ok::<(), maxplus::AlgebraError>(())
//! ```

pub mod error;
pub mod format;
pub mod linalg;
pub mod scalar;
pub mod scheduling;
pub mod solvers;

pub use error::{AlgebraError, Result};
pub use linalg::{TropMatrix, TropVector};
pub use scalar::{Exponent, Tolerance, TropScalar};
pub use scheduling::{Objective, ProjectProblem, ScheduleResult};
pub use solvers::{BellmanClass, BellmanOutcome, FirstKindOutcome, SpectralOutcome};
