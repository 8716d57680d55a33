//! Randomised property suites comparing `maxplus` against the oracles.
//!
//! Each suite draws its instances from a seeded ChaCha8 stream and returns
//! a [`Report`] on success or the first counterexample on failure. The
//! instance counts are parameters so unit tests can run a small sample
//! while the acceptance gate runs the full one.

use std::cmp::Ordering;

use maxplus::linalg::{self, TropMatrix, TropVector};
use maxplus::solvers::{self, BellmanClass};
use maxplus::{Exponent, Tolerance, TropScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{
    cycle_mean_oracle, definitional_closure, feasible_sampler, gen, max_closed_walk_weight,
};

/// How much a suite checked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Report {
    pub instances: usize,
    pub assertions: usize,
}

type Outcome = Result<Report, String>;

macro_rules! ensure {
    ($report:ident, $cond:expr, $($msg:tt)+) => {{
        $report.assertions += 1;
        if !$cond {
            return Err(format!($($msg)+));
        }
    }};
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn chebyshev(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Metric axioms of ρ(a, b) = b⁻a ⊕ a⁻b and agreement with the Chebyshev
/// distance on `pairs` random regular pairs.
pub fn metric_suite(pairs: usize, seed: u64, tol: Tolerance) -> Outcome {
    let mut rng = rng(seed);
    let mut r = Report::default();
    for _ in 0..pairs {
        let n = rng.gen_range(1..=8);
        let a = gen::real_vector(&mut rng, n, -100.0, 100.0);
        let b = gen::real_vector(&mut rng, n, -100.0, 100.0);
        let c = gen::real_vector(&mut rng, n, -100.0, 100.0);
        let ab = a.metric(&b).map_err(err)?;
        let ba = b.metric(&a).map_err(err)?;
        let cheb = chebyshev(&a.to_ieee(), &b.to_ieee());
        ensure!(r, ab == ba, "ρ not symmetric: {a} {b}");
        ensure!(
            r,
            TropScalar::ONE.approx_leq(ab, tol),
            "ρ below 𝟙 for {a} {b}"
        );
        ensure!(
            r,
            a.metric(&a).map_err(err)? == TropScalar::ONE,
            "ρ(a, a) ≠ 𝟙 for {a}"
        );
        ensure!(
            r,
            ab.approx_eq(TropScalar::finite(cheb), tol),
            "ρ({a}, {b}) = {ab}, Chebyshev distance {cheb}"
        );
        let via = a
            .metric(&c)
            .map_err(err)?
            .otimes(c.metric(&b).map_err(err)?);
        ensure!(
            r,
            ab.approx_leq(via, tol),
            "triangle inequality fails via {c}"
        );
        r.instances += 1;
    }
    Ok(r)
}

/// First-kind systems on random regular instances: half built solvable as
/// d = A⊗x, half with arbitrary d. Checks the sandwich y₁ ≤ d ≤ y₂, that the
/// residual detects solvability, that x₁ is the greatest subsolution (every
/// entry raised by 10ε breaks A⊗x ≤ d, every sampled subsolution lies below
/// it) and that no sampled x beats the quasi-solution's deviation Δ^{1/2}.
pub fn first_kind_suite(instances: usize, max_n: usize, seed: u64, tol: Tolerance) -> Outcome {
    let mut rng = rng(seed);
    let mut r = Report::default();
    let eps = tol.eps();
    for k in 0..instances {
        let m = rng.gen_range(1..=max_n);
        let n = rng.gen_range(1..=max_n);
        let a = gen::regular_matrix(&mut rng, m, n, -20, 20, 0.6);
        let solvable = k % 2 == 0;
        let d = if solvable {
            let x = gen::real_vector(&mut rng, n, -30.0, 30.0);
            a.apply(&x).map_err(err)?
        } else {
            gen::real_vector(&mut rng, m, -30.0, 30.0)
        };
        let out = solvers::solve_first_kind(&a, &d, tol).map_err(err)?;

        ensure!(
            r,
            TropScalar::ONE.approx_leq(out.delta, tol),
            "Δ = {} < 𝟙",
            out.delta
        );
        if solvable {
            ensure!(
                r,
                out.is_exact(),
                "solvable system reported Δ = {}\nA =\n{a}\nd = {d}",
                out.delta
            );
        }
        if out.is_exact() {
            ensure!(
                r,
                out.under_image.approx_eq(&d, tol),
                "exact solution misses d"
            );
        }
        ensure!(
            r,
            out.under_image.approx_leq(&d, tol),
            "y₁ = {} ≰ d = {d}",
            out.under_image
        );
        ensure!(
            r,
            d.approx_leq(&out.over_image, tol),
            "d = {d} ≰ y₂ = {}",
            out.over_image
        );

        let half = out.delta.pow(Exponent::new(1, 2)).map_err(err)?;
        let dev = out.quasi_image.metric(&d).map_err(err)?;
        ensure!(
            r,
            dev.approx_eq(half, tol),
            "ρ(y₀, d) = {dev}, Δ^1/2 = {half}"
        );

        // raising any constrained entry of x₁ by 10ε must violate A⊗x ≤ d
        let x1 = out.under_solution.to_ieee();
        for j in 0..n {
            if a.column(j).is_zero() {
                continue;
            }
            let mut bumped = x1.clone();
            bumped[j] += 10.0 * eps;
            let y = a
                .apply(&TropVector::from_ieee(&bumped).map_err(err)?)
                .map_err(err)?;
            ensure!(
                r,
                !y.approx_leq(&d, tol),
                "x₁ + 10ε·e{j} still satisfies A⊗x ≤ d"
            );
        }

        for x in feasible_sampler(&a, &d, 20, 5.0, &mut rng) {
            ensure!(
                r,
                a.apply(&x).map_err(err)?.approx_leq(&d, tol),
                "sampler produced an infeasible x"
            );
            ensure!(
                r,
                x.approx_leq(&out.under_solution, tol),
                "subsolution {x} exceeds x₁"
            );
        }
        for _ in 0..20 {
            let x = gen::real_vector(&mut rng, n, -60.0, 60.0);
            let dev_x = a.apply(&x).map_err(err)?.metric(&d).map_err(err)?;
            ensure!(
                r,
                half.approx_leq(dev_x, tol),
                "x = {x} has deviation {dev_x} < Δ^1/2 = {half}"
            );
        }
        r.instances += 1;
    }
    Ok(r)
}

fn lcm_upto(n: usize) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=n as i64).fold(1, |acc, k| acc / gcd(acc, k) * k)
}

/// Integer irreducible matrix with max cycle mean exactly `target`: a random
/// one is scaled by L = lcm(1..n) and shifted by −L·λ, which is an integer.
fn irreducible_with_mean<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    target: i64,
) -> Result<TropMatrix, String> {
    let base = gen::irreducible_matrix(rng, n, -9, 9, 0.5);
    let lambda = cycle_mean_oracle(&base)
        .map_err(err)?
        .value()
        .expect("irreducible has a cycle");
    let l = lcm_upto(n);
    let shift = (l as f64 * lambda).round();
    let rows: Vec<Vec<f64>> = base
        .to_ieee_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    if v == f64::NEG_INFINITY {
                        v
                    } else {
                        l as f64 * v - shift + target as f64
                    }
                })
                .collect()
        })
        .collect();
    TropMatrix::from_ieee_rows(&rows).map_err(err)
}

fn random_b<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TropVector {
    let v: Vec<f64> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                f64::NEG_INFINITY
            } else {
                rng.gen_range(-20..=20) as f64
            }
        })
        .collect();
    TropVector::from_ieee(&v).expect("finite or -inf")
}

fn random_coefficients<R: Rng + ?Sized>(rng: &mut R, k: usize) -> TropVector {
    let v: Vec<f64> = (0..k)
        .map(|_| {
            if rng.gen_bool(0.2) {
                f64::NEG_INFINITY
            } else {
                rng.gen_range(-40.0..40.0)
            }
        })
        .collect();
    TropVector::from_ieee(&v).expect("finite or -inf")
}

/// Bellman equations A⊗x ⊕ b = x over irreducible A with Tr(A) below, at
/// and above 𝟙. The classification must match the closed-walk oracle, every
/// returned solution and `samples` family members per instance must satisfy
/// the equation, and the inequality family must satisfy A⊗x ⊕ b ≤ x.
pub fn bellman_suite(instances: usize, samples: usize, seed: u64, tol: Tolerance) -> Outcome {
    let mut rng = rng(seed);
    let mut r = Report::default();
    for k in 0..instances {
        let n = rng.gen_range(1..=5);
        let target = match k % 3 {
            0 => 0,
            1 => -rng.gen_range(1..=5),
            _ => rng.gen_range(1..=5),
        };
        let a = irreducible_with_mean(&mut rng, n, target)?;
        let b = if rng.gen_bool(0.15) {
            TropVector::zeros(n)
        } else {
            random_b(&mut rng, n)
        };

        let tr = max_closed_walk_weight(&a).map_err(err)?;
        let out = solvers::solve_bellman(&a, &b, tol).map_err(err)?;
        ensure!(
            r,
            out.big_trace.approx_eq(tr, tol),
            "Tr = {}, closed walks give {tr}",
            out.big_trace
        );

        let expected = match (tr.cmp(&TropScalar::ONE), b.is_zero()) {
            (Ordering::Equal, _) => BellmanClass::SolutionFamily,
            (_, true) => BellmanClass::OnlyTrivial,
            (Ordering::Less, false) => BellmanClass::UniqueSolution,
            (Ordering::Greater, false) => BellmanClass::NoSolution,
        };
        ensure!(
            r,
            out.classification == expected,
            "classified {:?}, expected {expected:?}\nA =\n{a}",
            out.classification
        );

        let holds = |x: &TropVector| -> Result<bool, String> {
            let lhs = a.apply(x).map_err(err)?.oplus(&b).map_err(err)?;
            Ok(lhs.approx_eq(x, tol))
        };
        if let Some(p) = &out.particular {
            ensure!(
                r,
                holds(p)?,
                "particular solution {p} fails A⊗x ⊕ b = x\nA =\n{a}\nb = {b}"
            );
        }
        if let Some(g) = &out.generators {
            for col in g.columns() {
                ensure!(
                    r,
                    a.apply(&col).map_err(err)?.approx_eq(&col, tol),
                    "generator {col} is not a fixpoint"
                );
            }
            for _ in 0..samples {
                let v = random_coefficients(&mut rng, g.cols());
                let x = out.member(&v).map_err(err)?.expect("family");
                ensure!(
                    r,
                    holds(&x)?,
                    "family member {x} fails A⊗x ⊕ b = x\nA =\n{a}\nb = {b}"
                );
            }
        }

        let ineq = solvers::solve_bellman_inequality(&a, &b, tol).map_err(err)?;
        if ineq.classification == BellmanClass::SolutionFamily {
            for _ in 0..samples {
                let v = random_coefficients(&mut rng, n);
                let x = ineq.member(&v).map_err(err)?.expect("family");
                let lhs = a.apply(&x).map_err(err)?.oplus(&b).map_err(err)?;
                ensure!(
                    r,
                    lhs.approx_leq(&x, tol),
                    "inequality member {x} fails A⊗x ⊕ b ≤ x"
                );
            }
        }
        r.instances += 1;
    }
    Ok(r)
}

/// Eigenvalue against the maximum cycle mean found by enumerating cycles.
pub fn eigenvalue_suite(instances: usize, max_n: usize, seed: u64, tol: Tolerance) -> Outcome {
    let mut rng = rng(seed);
    let mut r = Report::default();
    for _ in 0..instances {
        let n = rng.gen_range(1..=max_n);
        let density = rng.gen_range(0.1..0.9);
        let a = gen::irreducible_matrix(&mut rng, n, -20, 20, density);
        let lambda = solvers::eigenvalue(&a).map_err(err)?;
        let oracle = cycle_mean_oracle(&a).map_err(err)?;
        ensure!(
            r,
            lambda.approx_eq(oracle, tol),
            "λ = {lambda}, max cycle mean {oracle}\nA =\n{a}"
        );
        r.instances += 1;
    }
    Ok(r)
}

/// For each eigenvector generator g, ρ(A⊗g, g) = |λ|; no regular x does
/// better, and none has max flow time max(A⊗x − x) below λ.
pub fn spectral_suite(instances: usize, probes: usize, seed: u64, tol: Tolerance) -> Outcome {
    let mut rng = rng(seed);
    let mut r = Report::default();
    for _ in 0..instances {
        let n = rng.gen_range(1..=6);
        let a = gen::irreducible_matrix(&mut rng, n, -20, 20, 0.5);
        let out = solvers::eigenvectors(&a, tol).map_err(err)?;
        let lambda = out.lambda.value().expect("irreducible");
        let abs = TropScalar::finite(lambda.abs());
        for g in out.eigen_generators.columns() {
            ensure!(r, g.is_regular(), "eigenvector {g} has a zero entry");
            let ag = a.apply(&g).map_err(err)?;
            ensure!(
                r,
                ag.approx_eq(&g.scale(out.lambda), tol),
                "A⊗g ≠ λ⊗g for g = {g}"
            );
            ensure!(
                r,
                ag.metric(&g).map_err(err)?.approx_eq(abs, tol),
                "ρ(A⊗g, g) ≠ |λ| for g = {g}"
            );
        }
        for _ in 0..probes {
            let x = gen::real_vector(&mut rng, n, -50.0, 50.0);
            let ax = a.apply(&x).map_err(err)?;
            let rho = ax.metric(&x).map_err(err)?;
            ensure!(
                r,
                abs.approx_leq(rho, tol),
                "ρ(A⊗x, x) = {rho} < |λ| for x = {x}"
            );
            let flow = ax
                .to_ieee()
                .iter()
                .zip(x.to_ieee())
                .map(|(y, x)| y - x)
                .fold(f64::NEG_INFINITY, f64::max);
            let reaches = lambda <= flow + tol.eps();
            ensure!(
                r,
                reaches,
                "max flow time {flow} < λ = {lambda} for x = {x}"
            );
        }
        r.instances += 1;
    }
    Ok(r)
}

/// A* by repeated squaring and A^× = A⊗A* against the literal power sums,
/// plus Tr(A) against the heaviest closed walk where that is enumerable.
pub fn closure_suite(instances: usize, max_n: usize, seed: u64, tol: Tolerance) -> Outcome {
    let mut rng = rng(seed);
    let mut r = Report::default();
    for _ in 0..instances {
        let n = rng.gen_range(1..=max_n);
        let density = rng.gen_range(0.2..0.9);
        let a = gen::int_matrix(&mut rng, n, n, -10, 6, density);
        let (star, plus) = definitional_closure(&a).map_err(err)?;
        let fast_star = linalg::star(&a).map_err(err)?;
        let fast_plus = linalg::plus_powers(&a).map_err(err)?;
        ensure!(
            r,
            fast_star.approx_eq(&star, tol),
            "A* differs\nA =\n{a}\ngot\n{fast_star}\nexpected\n{star}"
        );
        ensure!(
            r,
            fast_plus.approx_eq(&plus, tol),
            "A^× differs\nA =\n{a}\ngot\n{fast_plus}\nexpected\n{plus}"
        );
        if n <= 5 {
            let tr = linalg::big_trace(&a).map_err(err)?;
            let walks = max_closed_walk_weight(&a).map_err(err)?;
            ensure!(
                r,
                tr.approx_eq(walks, tol),
                "Tr = {tr}, heaviest closed walk {walks}\nA =\n{a}"
            );
        }
        r.instances += 1;
    }
    Ok(r)
}
