//! Seeded benchmark inputs.

use maxplus::{TropMatrix, TropVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense n×n matrix with entries uniform in [-10, 10). Every entry is
/// finite, so the matrix is regular and irreducible.
pub fn dense_matrix(n: usize, seed: u64) -> TropMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(-10.0..10.0)).collect())
        .collect();
    TropMatrix::from_ieee_rows(&rows).expect("finite entries")
}

/// Same as [`dense_matrix`] shifted so that its largest cycle mean is
/// negative, which keeps the Kleene star finite.
pub fn contracting_matrix(n: usize, seed: u64) -> TropMatrix {
    dense_matrix(n, seed).scale(maxplus::TropScalar::finite(-20.0))
}

pub fn dense_vector(n: usize, seed: u64) -> TropVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..100.0)).collect();
    TropVector::from_finite(&v)
}
