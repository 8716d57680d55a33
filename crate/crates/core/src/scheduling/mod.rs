//! Project scheduling under Start-to-Finish and Start-to-Start precedence
//! constraints.
//!
//! A Start-to-Finish lag aᵢⱼ bounds the completion of activity i from below
//! by the initiation of j plus aᵢⱼ; a Start-to-Start lag does the same for
//! the initiation of i. Missing lags are 𝟘.

mod ops;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::{Tolerance, TropScalar};

pub use ops::{
    earliest_start_ss, latest_start_mixed, latest_start_sf, min_flow_time, with_zero_self_lags,
};
pub use verify::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Latest initiation meeting due dates under Start-to-Finish lags.
    LatestStart,
    /// Earliest initiation under Start-to-Start lags and early starts.
    EarliestStart,
    /// Latest initiation under both constraint families.
    Mixed,
    /// Minimise the maximum flow time, optionally under due dates.
    MinMaxFlowTime,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::LatestStart => "latest_start",
            Objective::EarliestStart => "earliest_start",
            Objective::Mixed => "mixed",
            Objective::MinMaxFlowTime => "min_max_flow_time",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectProblem {
    pub n_activities: usize,
    pub sf_matrix: Option<TropMatrix>,
    pub ss_matrix: Option<TropMatrix>,
    pub due_dates: Option<TropVector>,
    pub early_starts: Option<TropVector>,
    pub objective: Objective,
}

fn invalid(field: &str, message: impl Into<String>) -> AlgebraError {
    AlgebraError::InvalidProblem {
        field: field.to_string(),
        message: message.into(),
    }
}

impl ProjectProblem {
    /// Checks that every matrix is n×n, every vector has n entries, and the
    /// inputs the objective needs are present.
    pub fn validate(&self) -> Result<()> {
        let n = self.n_activities;
        if n == 0 {
            return Err(invalid("n_activities", "at least one activity is required"));
        }
        for (field, m) in [("sf", &self.sf_matrix), ("ss", &self.ss_matrix)] {
            if let Some(m) = m {
                if m.shape() != (n, n) {
                    return Err(invalid(
                        field,
                        format!("expected {n}x{n} matrix, got {}x{}", m.rows(), m.cols()),
                    ));
                }
            }
        }
        for (field, v) in [("due", &self.due_dates), ("early", &self.early_starts)] {
            if let Some(v) = v {
                if v.len() != n {
                    return Err(invalid(
                        field,
                        format!("expected {n} entries, got {}", v.len()),
                    ));
                }
            }
        }
        if self.sf_matrix.is_none() && self.ss_matrix.is_none() {
            return Err(invalid("sf", "at least one constraint matrix is required"));
        }
        let needs: &[&str] = match self.objective {
            Objective::LatestStart => &["sf", "due"],
            Objective::EarliestStart => &["ss"],
            Objective::Mixed => &["sf", "ss", "due"],
            Objective::MinMaxFlowTime => &["sf"],
        };
        for &field in needs {
            let present = match field {
                "sf" => self.sf_matrix.is_some(),
                "ss" => self.ss_matrix.is_some(),
                _ => self.due_dates.is_some(),
            };
            if !present {
                return Err(invalid(
                    field,
                    format!("required for objective {}", self.objective.name()),
                ));
            }
        }
        Ok(())
    }

    pub fn solve(&self, tol: Tolerance) -> Result<ScheduleResult> {
        self.validate()?;
        // validate() guarantees the unwraps below
        match self.objective {
            Objective::LatestStart => latest_start_sf(
                self.sf_matrix.as_ref().unwrap(),
                self.due_dates.as_ref().unwrap(),
                tol,
            ),
            Objective::EarliestStart => {
                let early = self
                    .early_starts
                    .clone()
                    .unwrap_or_else(|| TropVector::zeros(self.n_activities));
                earliest_start_ss(self.ss_matrix.as_ref().unwrap(), &early, tol)
            }
            Objective::Mixed => latest_start_mixed(
                self.sf_matrix.as_ref().unwrap(),
                self.ss_matrix.as_ref().unwrap(),
                self.due_dates.as_ref().unwrap(),
                tol,
            ),
            Objective::MinMaxFlowTime => min_flow_time(
                self.sf_matrix.as_ref().unwrap(),
                self.due_dates.as_ref(),
                tol,
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Feasibility {
    /// Completion times equal the due dates.
    Exact,
    /// Due dates cannot be met exactly; Δ is the residual.
    Approximate { delta: TropScalar },
    /// A family of schedules; `initiation` is its canonical member.
    Family,
    /// All constraints hold, completion times may fall before the due dates.
    Feasible,
}

/// Start and finish times of one candidate schedule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleCandidate {
    pub start: TropVector,
    pub finish: TropVector,
}

/// Approximate schedules for inconsistent due dates. The finish times of
/// `under` and `over` bound any adjusted due dates d′ with deviation at
/// most Δ; `quasi.finish` is the adjustment with the least deviation Δ^{1/2}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Approximation {
    pub quasi: ScheduleCandidate,
    pub under: ScheduleCandidate,
    pub over: ScheduleCandidate,
}

/// Schedules `particular ⊕ generators⊗v`. Without a particular part the
/// family is the column span of `generators`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleFamily {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particular: Option<TropVector>,
    pub generators: TropMatrix,
}

/// Intermediate values of x = G(d⁻AG)⁻ where G spans admissible schedules.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSolution {
    pub generators: TropMatrix,
    /// A⊗G
    pub composite: TropMatrix,
    /// (d⁻AG)⁻
    pub coefficients: TropVector,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<TropScalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big_trace: Option<TropScalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<TropScalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_flow_time: Option<TropScalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleResult {
    pub objective: Objective,
    pub feasibility: Feasibility,
    pub initiation: TropVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completion: Option<TropVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approximation: Option<Approximation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<ScheduleFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_solution: Option<GeneratorSolution>,
    pub diagnostics: Diagnostics,
}

impl ScheduleResult {
    /// Completion minus initiation per activity, where both are finite.
    pub fn flow_times(&self) -> Option<Vec<TropScalar>> {
        let completion = self.completion.as_ref()?;
        Some(
            completion
                .iter()
                .zip(&self.initiation)
                .map(|(y, x)| match y.minus(*x) {
                    Some(f) => TropScalar::finite(f),
                    None => TropScalar::ZERO,
                })
                .collect(),
        )
    }
}
