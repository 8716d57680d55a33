//! Closed-form solvers: first-kind systems, Bellman systems and the
//! spectral problem.

mod first_kind;
mod second_kind;
mod spectral;

pub use first_kind::{residual, solve_first_kind, solve_first_kind_inequality, FirstKindOutcome};
pub use second_kind::{solve_bellman, solve_bellman_inequality, BellmanClass, BellmanOutcome};
pub use spectral::{eigenvalue, eigenvectors, SpectralOutcome};

pub(crate) use second_kind::compare_with_one;
