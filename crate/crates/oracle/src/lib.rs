//! Brute-force reference implementations for testing `maxplus`.
//!
//! Everything here works on plain `f64` with `−∞` for the semiring zero and
//! walks the definitions directly: cycles are enumerated, powers are summed
//! one by one, span membership is found by grid search. Nothing is shared
//! with the closed-form code paths it checks. Costs grow factorially, so the
//! enumerators refuse large inputs.

use maxplus::{TropMatrix, TropScalar, TropVector};
use rand::Rng;
use thiserror::Error;

pub mod checks;
pub mod gen;

const NEG_INF: f64 = f64::NEG_INFINITY;

/// Largest matrix the cycle enumerators accept.
pub const MAX_CYCLE_N: usize = 10;
/// Largest matrix the closed-walk enumerator accepts.
pub const MAX_WALK_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{n}x{n} matrix exceeds the brute-force limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("square matrix expected, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

fn square(a: &TropMatrix, max: usize) -> Result<usize, OracleError> {
    let (rows, cols) = a.shape();
    if rows != cols {
        return Err(OracleError::NotSquare { rows, cols });
    }
    if rows > max {
        return Err(OracleError::TooLarge { n: rows, max });
    }
    Ok(rows)
}

fn otimes(a: f64, b: f64) -> f64 {
    if a == NEG_INF || b == NEG_INF {
        NEG_INF
    } else {
        a + b
    }
}

/// One elementary cycle of the precedence digraph (arc j → i for aᵢⱼ ≠ 𝟘).
#[derive(Debug, Clone, PartialEq)]
pub struct Cycle {
    /// Vertices in traversal order, starting from the smallest; the closing
    /// arc back to the first vertex is implied.
    pub vertices: Vec<usize>,
    pub weight: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CycleList {
    pub cycles: Vec<Cycle>,
}

impl CycleList {
    pub fn max_mean(&self) -> Option<f64> {
        self.cycles.iter().map(|c| c.mean).reduce(f64::max)
    }

    pub fn max_weight(&self) -> Option<f64> {
        self.cycles.iter().map(|c| c.weight).reduce(f64::max)
    }
}

/// All elementary cycles, each listed once (rooted at its smallest vertex).
pub fn elementary_cycles(a: &TropMatrix) -> Result<CycleList, OracleError> {
    let n = square(a, MAX_CYCLE_N)?;
    let w = a.to_ieee_rows();
    // arc u → v carries weight a[v][u]
    let arc = |u: usize, v: usize| w[v][u];

    fn extend(
        root: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        weight: f64,
        n: usize,
        arc: &dyn Fn(usize, usize) -> f64,
        out: &mut Vec<Cycle>,
    ) {
        let last = *path.last().unwrap();
        let back = arc(last, root);
        if back != NEG_INF {
            let total = weight + back;
            out.push(Cycle {
                vertices: path.clone(),
                weight: total,
                mean: total / path.len() as f64,
            });
        }
        for next in root + 1..n {
            let w = arc(last, next);
            if w == NEG_INF || on_path[next] {
                continue;
            }
            on_path[next] = true;
            path.push(next);
            extend(root, path, on_path, weight + w, n, arc, out);
            path.pop();
            on_path[next] = false;
        }
    }

    let mut cycles = Vec::new();
    for root in 0..n {
        let mut on_path = vec![false; n];
        on_path[root] = true;
        extend(
            root,
            &mut vec![root],
            &mut on_path,
            0.0,
            n,
            &arc,
            &mut cycles,
        );
    }
    Ok(CycleList { cycles })
}

/// Maximum cycle mean by exhaustive enumeration; 𝟘 for an acyclic digraph.
pub fn cycle_mean_oracle(a: &TropMatrix) -> Result<TropScalar, OracleError> {
    Ok(elementary_cycles(a)?
        .max_mean()
        .map_or(TropScalar::ZERO, TropScalar::finite))
}

/// Heaviest closed walk with between 1 and n arcs, by enumerating every
/// vertex sequence. This is the quantity ⊕ₘ tr Aᵐ.
pub fn max_closed_walk_weight(a: &TropMatrix) -> Result<TropScalar, OracleError> {
    let n = square(a, MAX_WALK_N)?;
    let w = a.to_ieee_rows();
    let mut best = NEG_INF;
    for len in 1..=n {
        // odometer over vertex sequences v₀ … v_{len−1}
        let mut seq = vec![0usize; len];
        loop {
            let mut total = 0.0;
            for k in 0..len {
                let from = seq[k];
                let to = seq[(k + 1) % len];
                total = otimes(total, w[to][from]);
            }
            best = best.max(total);

            let mut pos = 0;
            while pos < len {
                seq[pos] += 1;
                if seq[pos] < n {
                    break;
                }
                seq[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
    Ok(TropScalar::from_ieee(best).expect("finite or -inf"))
}

/// Matrix product by the triple-loop definition.
pub fn matmul_definitional(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let (m, k, n) = (a.len(), b.len(), b[0].len());
    assert_eq!(a[0].len(), k, "inner dimensions differ");
    let mut out = vec![vec![NEG_INF; n]; m];
    for i in 0..m {
        for j in 0..n {
            for l in 0..k {
                out[i][j] = out[i][j].max(otimes(a[i][l], b[l][j]));
            }
        }
    }
    out
}

fn to_matrix(rows: &[Vec<f64>]) -> TropMatrix {
    TropMatrix::from_ieee_rows(rows).expect("oracle values are finite or -inf")
}

/// (A*, A^×) by literal accumulation of I, A, A², …, Aⁿ.
pub fn definitional_closure(a: &TropMatrix) -> Result<(TropMatrix, TropMatrix), OracleError> {
    let n = square(a, usize::MAX)?;
    let base = a.to_ieee_rows();
    let mut star = vec![vec![NEG_INF; n]; n];
    for (i, row) in star.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    let mut plus = vec![vec![NEG_INF; n]; n];
    let mut power = base.clone();
    for m in 1..=n {
        for i in 0..n {
            for j in 0..n {
                if m < n {
                    star[i][j] = star[i][j].max(power[i][j]);
                }
                plus[i][j] = plus[i][j].max(power[i][j]);
            }
        }
        power = matmul_definitional(&power, &base);
    }
    Ok((to_matrix(&star), to_matrix(&plus)))
}

/// Random vectors x with A⊗x ≤ d, obtained by lowering each entry of
/// (d⁻A)⁻ by a random amount in [0, `max_drop`].
pub fn feasible_sampler<R: Rng + ?Sized>(
    a: &TropMatrix,
    d: &TropVector,
    count: usize,
    max_drop: f64,
    rng: &mut R,
) -> Vec<TropVector> {
    let w = a.to_ieee_rows();
    let d = d.to_ieee();
    let n = a.cols();
    let top: Vec<f64> = (0..n)
        .map(|j| {
            (0..w.len())
                .filter(|&i| w[i][j] != NEG_INF)
                .map(|i| d[i] - w[i][j])
                .reduce(f64::min)
                .unwrap_or(NEG_INF)
        })
        .collect();
    (0..count)
        .map(|_| {
            let x: Vec<f64> = top
                .iter()
                .map(|&t| {
                    if t == NEG_INF {
                        t
                    } else {
                        t - rng.gen_range(0.0..=max_drop)
                    }
                })
                .collect();
            TropVector::from_ieee(&x).expect("finite or -inf")
        })
        .collect()
}

/// Whether `c` = S⊗v for some v on a grid of spacing `step` inside
/// [`lo`, `hi`]ⁿ (each coefficient may also be 𝟘).
pub fn in_span_grid_search(
    c: &TropVector,
    s: &TropMatrix,
    step: f64,
    lo: f64,
    hi: f64,
    eps: f64,
) -> bool {
    let cols = s.cols();
    let rows = s.to_ieee_rows();
    let target = c.to_ieee();
    let mut grid: Vec<f64> = vec![NEG_INF];
    let mut g = lo;
    while g <= hi + 1e-12 {
        grid.push(g);
        g += step;
    }
    let mut idx = vec![0usize; cols];
    loop {
        let hit = rows.iter().zip(&target).all(|(row, t)| {
            let y = row
                .iter()
                .zip(&idx)
                .map(|(a, &k)| otimes(*a, grid[k]))
                .fold(NEG_INF, f64::max);
            y == *t || (y - t).abs() <= eps
        });
        if hit {
            return true;
        }
        let mut pos = 0;
        while pos < cols {
            idx[pos] += 1;
            if idx[pos] < grid.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == cols {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Z: f64 = NEG_INF;

    fn m(rows: &[&[f64]]) -> TropMatrix {
        TropMatrix::from_ieee_rows(rows).unwrap()
    }

    #[test]
    fn cycle_mean_examples() {
        let flow = m(&[&[2.0, 4.0, 4.0], &[2.0, 3.0, 5.0], &[3.0, 2.0, 3.0]]);
        assert_eq!(cycle_mean_oracle(&flow).unwrap(), TropScalar::finite(4.0));

        let acyclic = m(&[&[Z, 1.0, 2.0], &[Z, Z, 3.0], &[Z, Z, Z]]);
        assert_eq!(cycle_mean_oracle(&acyclic).unwrap(), TropScalar::ZERO);

        // cycles: {1} weight 1, {2} weight 2, {1,2} weight 8 → means 1, 2, 4
        let full = m(&[&[1.0, 3.0], &[5.0, 2.0]]);
        let cycles = elementary_cycles(&full).unwrap();
        assert_eq!(cycles.cycles.len(), 3);
        assert_eq!(cycle_mean_oracle(&full).unwrap(), TropScalar::finite(4.0));
    }

    #[test]
    fn enumerates_every_cycle_of_complete_digraph() {
        // K₄ with loops: Σₖ C(4,k)(k−1)! = 4 + 6 + 8 + 6
        let k4 = TropMatrix::from_ieee_rows(&vec![vec![0.0; 4]; 4]).unwrap();
        assert_eq!(elementary_cycles(&k4).unwrap().cycles.len(), 24);
    }

    #[test]
    fn too_large() {
        let big = TropMatrix::zeros(11, 11);
        assert_eq!(
            cycle_mean_oracle(&big),
            Err(OracleError::TooLarge {
                n: 11,
                max: MAX_CYCLE_N
            })
        );
    }

    #[test]
    fn closed_walks_exceed_elementary_cycles_when_positive() {
        let a = m(&[&[1.0]]);
        assert_eq!(max_closed_walk_weight(&a).unwrap(), TropScalar::finite(1.0));
        let a = m(&[&[1.0, Z], &[Z, -3.0]]);
        assert_eq!(max_closed_walk_weight(&a).unwrap(), TropScalar::finite(2.0));
        assert_eq!(elementary_cycles(&a).unwrap().max_weight(), Some(1.0));
    }

    #[test]
    fn closure_examples() {
        let ss = m(&[
            &[0.0, -2.0, Z, Z],
            &[Z, 0.0, 3.0, -1.0],
            &[-1.0, Z, 0.0, -4.0],
            &[2.0, Z, Z, 0.0],
        ]);
        let expected_closure = m(&[
            &[0.0, -2.0, 1.0, -3.0],
            &[2.0, 0.0, 3.0, -1.0],
            &[-1.0, -3.0, 0.0, -4.0],
            &[2.0, 0.0, 3.0, 0.0],
        ]);
        let (star, plus) = definitional_closure(&ss).unwrap();
        assert_eq!(star, expected_closure);
        assert_eq!(plus, expected_closure);

        let i = TropMatrix::identity(3);
        assert_eq!(definitional_closure(&i).unwrap(), (i.clone(), i));
    }

    #[test]
    fn sampler_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = m(&[
            &[8.0, 10.0, Z, Z],
            &[Z, 5.0, 4.0, 8.0],
            &[6.0, 12.0, 11.0, 7.0],
            &[Z, Z, Z, 12.0],
        ]);
        let d = TropVector::from_finite(&[14.0, 11.0, 16.0, 15.0]);
        let top = TropVector::from_finite(&[6.0, 4.0, 5.0, 3.0]);
        let samples = feasible_sampler(&a, &d, 3, 2.0, &mut rng);
        assert_eq!(samples.len(), 3);
        for x in &samples {
            assert!(x.iter().zip(&top).all(|(a, b)| a <= b));
            assert!(a.apply(x).unwrap().iter().zip(&d).all(|(y, d)| y <= d));
        }
        assert!(feasible_sampler(&a, &d, 0, 2.0, &mut rng).is_empty());

        let i = TropMatrix::identity(2);
        let zero = TropVector::from_finite(&[0.0, 0.0]);
        for x in feasible_sampler(&i, &zero, 5, 1.0, &mut rng) {
            assert!(x.iter().all(|v| *v <= TropScalar::ONE));
        }
    }

    #[test]
    fn grid_search_span() {
        let s = m(&[&[0.0, Z], &[1.0, 0.0]]);
        assert!(in_span_grid_search(
            &TropVector::from_finite(&[2.0, 3.0]),
            &s,
            0.5,
            -5.0,
            5.0,
            1e-9
        ));
        // first entry forces v₁ = 2, so the second entry is at least 3
        assert!(!in_span_grid_search(
            &TropVector::from_finite(&[2.0, 2.5]),
            &s,
            0.5,
            -5.0,
            5.0,
            1e-9
        ));
    }
}
