//! Substitution checks that recompute constraints from their scalar
//! definitions, max_j(aᵢⱼ + xⱼ), without going through the matrix code.

use super::{Feasibility, Objective, ProjectProblem, ScheduleResult};
use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::Tolerance;

fn apply_definitional(a: &TropMatrix, x: &[f64]) -> Vec<f64> {
    a.to_ieee_rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .map(|(a, x)| {
                    if *a == f64::NEG_INFINITY || *x == f64::NEG_INFINITY {
                        f64::NEG_INFINITY
                    } else {
                        a + x
                    }
                })
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect()
}

fn close(a: f64, b: f64, eps: f64) -> bool {
    a == b || (a - b).abs() <= eps
}

fn check_eq(label: &str, lhs: &[f64], rhs: &[f64], eps: f64, out: &mut Vec<String>) {
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if !close(*l, *r, eps) {
            out.push(format!("{label}: activity {}: {l} != {r}", i + 1));
        }
    }
}

fn check_leq(label: &str, lhs: &[f64], rhs: &[f64], eps: f64, out: &mut Vec<String>) {
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if !(*l <= *r || close(*l, *r, eps)) {
            out.push(format!("{label}: activity {}: {l} > {r}", i + 1));
        }
    }
}

fn oplus(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x.max(*y)).collect()
}

/// Lists every constraint the result violates; empty when it checks out.
pub fn verify(problem: &ProjectProblem, result: &ScheduleResult, tol: Tolerance) -> Vec<String> {
    let eps = tol.eps();
    let mut out = Vec::new();
    let x = result.initiation.to_ieee();
    let ieee = |v: &Option<TropVector>| v.as_ref().map(TropVector::to_ieee);

    match problem.objective {
        Objective::LatestStart => {
            let (Some(sf), Some(d)) = (&problem.sf_matrix, ieee(&problem.due_dates)) else {
                return vec!["missing Start-to-Finish matrix or due dates".into()];
            };
            let y = apply_definitional(sf, &x);
            match &result.feasibility {
                Feasibility::Exact => check_eq("completion = due date", &y, &d, eps, &mut out),
                Feasibility::Approximate { .. } => {
                    if let Some(a) = &result.approximation {
                        let y1 = apply_definitional(sf, &a.under.start.to_ieee());
                        let y2 = apply_definitional(sf, &a.over.start.to_ieee());
                        check_leq("under-schedule completion <= due", &y1, &d, eps, &mut out);
                        check_leq("due <= over-schedule completion", &d, &y2, eps, &mut out);
                    }
                }
                _ => out.push("unexpected feasibility for latest start".into()),
            }
            if let Some(c) = ieee(&result.completion) {
                check_eq("reported completion", &c, &y, eps, &mut out);
            }
        }
        Objective::EarliestStart => {
            let Some(ss) = &problem.ss_matrix else {
                return vec!["missing Start-to-Start matrix".into()];
            };
            let Ok(ss) = super::with_zero_self_lags(ss) else {
                return vec!["Start-to-Start matrix is not square".into()];
            };
            let b = ieee(&problem.early_starts).unwrap_or_else(|| vec![f64::NEG_INFINITY; x.len()]);
            let fixed = oplus(&apply_definitional(&ss, &x), &b);
            check_eq(
                "max(lagged starts, early start) = start",
                &fixed,
                &x,
                eps,
                &mut out,
            );
            if let Some(fam) = &result.family {
                for (k, g) in fam.generators.columns().iter().enumerate() {
                    let g = g.to_ieee();
                    let ag = apply_definitional(&ss, &g);
                    check_eq(
                        &format!("generator {} is a fixpoint", k + 1),
                        &ag,
                        &g,
                        eps,
                        &mut out,
                    );
                }
            }
        }
        Objective::Mixed => {
            let (Some(sf), Some(ss), Some(d)) = (
                &problem.sf_matrix,
                &problem.ss_matrix,
                ieee(&problem.due_dates),
            ) else {
                return vec!["missing matrix or due dates".into()];
            };
            let Ok(ss) = super::with_zero_self_lags(ss) else {
                return vec!["Start-to-Start matrix is not square".into()];
            };
            check_eq(
                "Start-to-Start fixpoint",
                &apply_definitional(&ss, &x),
                &x,
                eps,
                &mut out,
            );
            check_leq(
                "completion <= due date",
                &apply_definitional(sf, &x),
                &d,
                eps,
                &mut out,
            );
        }
        Objective::MinMaxFlowTime => {
            let Some(sf) = &problem.sf_matrix else {
                return vec!["missing Start-to-Finish matrix".into()];
            };
            let Some(lambda) = result.diagnostics.eigenvalue.and_then(|l| l.value()) else {
                return vec!["missing eigenvalue".into()];
            };
            let y = apply_definitional(sf, &x);
            let lx: Vec<f64> = x.iter().map(|v| v + lambda).collect();
            check_eq("completion = start + eigenvalue", &y, &lx, eps, &mut out);
            if let Some(d) = ieee(&problem.due_dates) {
                check_leq("completion <= due date", &y, &d, eps, &mut out);
            }
        }
    }
    out
}
