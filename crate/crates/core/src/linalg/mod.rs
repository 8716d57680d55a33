//! Dense max-plus vectors and matrices.

mod closure;
mod graph;
mod matrix;
mod vector;

pub use closure::{big_trace, generator, is_dependent, plus_powers, star, trace};
pub use graph::{is_irreducible, require_irreducible, strongly_connected_components};
pub use matrix::TropMatrix;
pub use vector::TropVector;
