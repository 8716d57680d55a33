use std::cmp::Ordering;

use super::{
    Approximation, Diagnostics, Feasibility, GeneratorSolution, Objective, ScheduleCandidate,
    ScheduleFamily, ScheduleResult,
};
use crate::error::{AlgebraError, Result};
use crate::linalg::{self, TropMatrix, TropVector};
use crate::scalar::{Tolerance, TropScalar};
use crate::solvers::{self, compare_with_one};

/// Copy of a Start-to-Start matrix with aᵢᵢ = 𝟙 wherever the self-lag is 𝟘.
pub fn with_zero_self_lags(ss: &TropMatrix) -> Result<TropMatrix> {
    let n = ss.require_square()?;
    let mut out = ss.clone();
    for i in 0..n {
        if out.get(i, i).is_zero() {
            out.set(i, i, TropScalar::ONE);
        }
    }
    Ok(out)
}

/// Start-to-Start matrix prepared for solving: self-lags inserted and no
/// positive cycle. Returns the matrix and its Tr.
fn admissible_ss(ss: &TropMatrix, tol: Tolerance) -> Result<(TropMatrix, TropScalar)> {
    let ss = with_zero_self_lags(ss)?;
    let tr = linalg::big_trace(&ss)?;
    if compare_with_one(tr, tol) == Ordering::Greater {
        return Err(AlgebraError::InfeasibleCycles {
            big_trace: tr.to_ieee(),
        });
    }
    Ok((ss, tr))
}

/// Latest x = G(d⁻AG)⁻ within the span of `generators` meeting A⊗x ≤ d.
fn latest_in_span(
    sf: &TropMatrix,
    generators: TropMatrix,
    d: &TropVector,
) -> Result<(TropVector, GeneratorSolution)> {
    let composite = sf.mul(&generators)?;
    let coefficients = solvers::solve_first_kind_inequality(&composite, d)?;
    let x = generators.apply(&coefficients)?;
    Ok((
        x,
        GeneratorSolution {
            generators,
            composite,
            coefficients,
        },
    ))
}

fn require_regular(sf: &TropMatrix, d: &TropVector) -> Result<()> {
    if !sf.is_regular() {
        return Err(AlgebraError::IrregularInput(
            "Start-to-Finish matrix has an activity with no lags".into(),
        ));
    }
    if !d.is_regular() {
        return Err(AlgebraError::IrregularInput(
            "every due date must be finite".into(),
        ));
    }
    Ok(())
}

/// Latest initiation times under Start-to-Finish lags that complete every
/// activity exactly at its due date, or the approximate schedules when the
/// due dates are inconsistent.
///
/// In the approximate case `initiation`/`completion` hold the quasi-solution,
/// whose completion times are the least-deviation adjusted due dates.
pub fn latest_start_sf(sf: &TropMatrix, d: &TropVector, tol: Tolerance) -> Result<ScheduleResult> {
    let out = solvers::solve_first_kind(sf, d, tol)?;
    let diagnostics = Diagnostics {
        residual: Some(out.delta),
        ..Diagnostics::default()
    };
    if let Some(x) = out.exact_max_solution {
        return Ok(ScheduleResult {
            objective: Objective::LatestStart,
            feasibility: Feasibility::Exact,
            initiation: x,
            completion: Some(out.under_image),
            approximation: None,
            family: None,
            generator_solution: None,
            diagnostics,
        });
    }
    Ok(ScheduleResult {
        objective: Objective::LatestStart,
        feasibility: Feasibility::Approximate { delta: out.delta },
        initiation: out.quasi_solution.clone(),
        completion: Some(out.quasi_image.clone()),
        approximation: Some(Approximation {
            quasi: ScheduleCandidate {
                start: out.quasi_solution,
                finish: out.quasi_image,
            },
            under: ScheduleCandidate {
                start: out.under_solution,
                finish: out.under_image,
            },
            over: ScheduleCandidate {
                start: out.over_solution,
                finish: out.over_image,
            },
        }),
        family: None,
        generator_solution: None,
        diagnostics,
    })
}

/// Earliest initiation times under Start-to-Start lags and early starts:
/// every solution of A⊗x ⊕ b = x is A*b ⊕ A⁺v.
///
/// The canonical member is A*b, or the sum of the generator columns when
/// there are no early starts.
pub fn earliest_start_ss(
    ss: &TropMatrix,
    b: &TropVector,
    tol: Tolerance,
) -> Result<ScheduleResult> {
    let (ss, tr) = admissible_ss(ss, tol)?;
    if b.len() != ss.rows() {
        return Err(AlgebraError::DimensionMismatch {
            context: "early start vector",
            expected: ss.rows(),
            found: b.len(),
        });
    }
    let particular = linalg::star(&ss)?.apply(b)?;
    let generators = linalg::generator(&ss, tol)?;
    let initiation = if b.is_zero() {
        generators.apply(&TropVector::ones(generators.cols()))?
    } else {
        particular.clone()
    };
    Ok(ScheduleResult {
        objective: Objective::EarliestStart,
        feasibility: Feasibility::Family,
        initiation,
        completion: None,
        approximation: None,
        family: Some(ScheduleFamily {
            particular: Some(particular),
            generators,
        }),
        generator_solution: None,
        diagnostics: Diagnostics {
            big_trace: Some(tr),
            ..Diagnostics::default()
        },
    })
}

/// Latest initiation times under both constraint families: x = A₂⁺(d⁻A₁A₂⁺)⁻
/// with A₁ the Start-to-Finish and A₂ the Start-to-Start matrix.
pub fn latest_start_mixed(
    sf: &TropMatrix,
    ss: &TropMatrix,
    d: &TropVector,
    tol: Tolerance,
) -> Result<ScheduleResult> {
    require_regular(sf, d)?;
    let (ss, tr) = admissible_ss(ss, tol)?;
    if sf.shape() != ss.shape() {
        return Err(AlgebraError::DimensionMismatch {
            context: "Start-to-Start matrix",
            expected: sf.rows(),
            found: ss.rows(),
        });
    }
    let generators = linalg::generator(&ss, tol)?;
    let (x, generator_solution) = latest_in_span(sf, generators, d)?;
    let completion = sf.apply(&x)?;
    Ok(ScheduleResult {
        objective: Objective::Mixed,
        feasibility: Feasibility::Feasible,
        initiation: x,
        completion: Some(completion),
        approximation: None,
        family: None,
        generator_solution: Some(generator_solution),
        diagnostics: Diagnostics {
            big_trace: Some(tr),
            ..Diagnostics::default()
        },
    })
}

/// Schedules minimising the maximum flow time under Start-to-Finish lags.
///
/// Without due dates the result is the eigenvector family A_λ⁺v, with the
/// sum of the generator columns as canonical member. With due dates it is
/// the latest eigenvector x = A_λ⁺(d⁻AA_λ⁺)⁻ meeting A⊗x ≤ d.
pub fn min_flow_time(
    sf: &TropMatrix,
    d: Option<&TropVector>,
    tol: Tolerance,
) -> Result<ScheduleResult> {
    let spectral = solvers::eigenvectors(sf, tol)?;
    let generators = spectral.eigen_generators;
    let (initiation, feasibility, family, generator_solution) = match d {
        Some(d) => {
            require_regular(sf, d)?;
            let (x, sol) = latest_in_span(sf, generators, d)?;
            (x, Feasibility::Feasible, None, Some(sol))
        }
        None => {
            let x = generators.apply(&TropVector::ones(generators.cols()))?;
            let family = ScheduleFamily {
                particular: None,
                generators,
            };
            (x, Feasibility::Family, Some(family), None)
        }
    };
    let completion = sf.apply(&initiation)?;
    let max_flow_time = completion.metric(&initiation)?;
    Ok(ScheduleResult {
        objective: Objective::MinMaxFlowTime,
        feasibility,
        initiation,
        completion: Some(completion),
        approximation: None,
        family,
        generator_solution,
        diagnostics: Diagnostics {
            eigenvalue: Some(spectral.lambda),
            max_flow_time: Some(max_flow_time),
            ..Diagnostics::default()
        },
    })
}
