//! Random instances with integer entries, so max-plus arithmetic on them is
//! exact in `f64`.

use maxplus::{TropMatrix, TropVector};
use rand::Rng;

/// rows×cols matrix; each entry is finite with probability `density`,
/// drawn uniformly from `lo..=hi`.
pub fn int_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    lo: i32,
    hi: i32,
    density: f64,
) -> TropMatrix {
    let data: Vec<Vec<f64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_bool(density) {
                        rng.gen_range(lo..=hi) as f64
                    } else {
                        f64::NEG_INFINITY
                    }
                })
                .collect()
        })
        .collect();
    TropMatrix::from_ieee_rows(&data).expect("non-empty")
}

/// Matrix with no zero row: every row gets at least one finite entry.
pub fn regular_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    lo: i32,
    hi: i32,
    density: f64,
) -> TropMatrix {
    let mut m = int_matrix(rng, rows, cols, lo, hi, density);
    for i in 0..rows {
        if m.row(i).is_zero() {
            let j = rng.gen_range(0..cols);
            m.set(i, j, (rng.gen_range(lo..=hi)).into());
        }
    }
    m
}

/// Irreducible n×n matrix: a random Hamiltonian cycle is forced in before
/// the remaining entries are filled at `density`.
pub fn irreducible_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    lo: i32,
    hi: i32,
    density: f64,
) -> TropMatrix {
    let mut m = int_matrix(rng, n, n, lo, hi, density);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    for k in 0..n {
        let from = order[k];
        let to = order[(k + 1) % n];
        if m.get(to, from).is_zero() {
            m.set(to, from, (rng.gen_range(lo..=hi)).into());
        }
    }
    m
}

pub fn regular_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: i32, hi: i32) -> TropVector {
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..=hi) as f64).collect();
    TropVector::from_finite(&v)
}

/// Real-valued regular vector with entries uniform in [lo, hi).
pub fn real_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: f64, hi: f64) -> TropVector {
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..hi)).collect();
    TropVector::from_finite(&v)
}
