//! JSON problem files.
//!
//! ```json
//! {
//!   "version": "1",
//!   "problem": {
//!     "objective": "latest_start",
//!     "sf": [[8, 10, null, null], [null, 5, 4, 8], [6, 12, 11, 7], [null, null, null, 12]],
//!     "due": [14, 11, 16, 15]
//!   },
//!   "options": { "tolerance": 1e-9, "output": "human" }
//! }
//! ```
//!
//! Matrices are arrays of rows. `null` is the semiring zero (a missing lag
//! or an absent early start); numbers are finite time values. Recognised
//! problem keys are `objective`, `n_activities`, `sf`, `ss`, `due` and
//! `early`; everything except `version` and `problem` is optional.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::linalg::{TropMatrix, TropVector};
use crate::scalar::Tolerance;
use crate::scheduling::{Objective, ProjectProblem, ScheduleResult};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: &str, message: impl ToString) -> FormatError {
    FormatError::Field {
        field: field.to_string(),
        message: message.to_string(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputMode {
    Human,
    Machine,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileOptions {
    pub tolerance: Option<Tolerance>,
    pub output: Option<OutputMode>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub version: String,
    pub objective: Option<Objective>,
    pub n_activities: Option<usize>,
    pub sf: Option<TropMatrix>,
    pub ss: Option<TropMatrix>,
    pub due: Option<TropVector>,
    pub early: Option<TropVector>,
    pub options: FileOptions,
}

fn take<T: DeserializeOwned>(
    obj: &mut Map<String, Value>,
    key: &str,
    path: &str,
) -> Result<Option<T>, FormatError> {
    match obj.remove(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => serde_json::from_value(v)
            .map(Some)
            .map_err(|e| field_error(&format!("{path}{key}"), e)),
    }
}

fn as_object(v: Value, field: &str) -> Result<Map<String, Value>, FormatError> {
    match v {
        Value::Object(m) => Ok(m),
        other => Err(field_error(
            field,
            format!("expected an object, got {other}"),
        )),
    }
}

fn reject_unknown(obj: &Map<String, Value>, path: &str) -> Result<(), FormatError> {
    match obj.keys().next() {
        Some(k) => Err(field_error(&format!("{path}{k}"), "unknown key")),
        None => Ok(()),
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut root = as_object(serde_json::from_str(text)?, "(root)")?;

        let version: String =
            take(&mut root, "version", "")?.ok_or_else(|| field_error("version", "missing"))?;
        if version != FORMAT_VERSION && !version.starts_with("1.") {
            return Err(field_error(
                "version",
                format!("unsupported version {version:?}, expected {FORMAT_VERSION:?}"),
            ));
        }

        let mut problem = as_object(
            root.remove("problem")
                .ok_or_else(|| field_error("problem", "missing"))?,
            "problem",
        )?;
        let objective = take(&mut problem, "objective", "problem.")?;
        let n_activities = take(&mut problem, "n_activities", "problem.")?;
        let sf = take(&mut problem, "sf", "problem.")?;
        let ss = take(&mut problem, "ss", "problem.")?;
        let due = take(&mut problem, "due", "problem.")?;
        let early = take(&mut problem, "early", "problem.")?;
        reject_unknown(&problem, "problem.")?;

        let mut options = FileOptions::default();
        if let Some(v) = root.remove("options") {
            let mut obj = as_object(v, "options")?;
            if let Some(eps) = take::<f64>(&mut obj, "tolerance", "options.")? {
                options.tolerance =
                    Some(Tolerance::new(eps).map_err(|e| field_error("options.tolerance", e))?);
            }
            options.output = take(&mut obj, "output", "options.")?;
            reject_unknown(&obj, "options.")?;
        }
        reject_unknown(&root, "")?;

        Ok(ProblemFile {
            version,
            objective,
            n_activities,
            sf,
            ss,
            due,
            early,
            options,
        })
    }

    /// Builds the problem for `objective`, cross-checking dimensions and the
    /// objective recorded in the file, if any.
    pub fn to_problem(&self, objective: Objective) -> Result<ProjectProblem, FormatError> {
        if let Some(recorded) = self.objective {
            if recorded != objective {
                return Err(field_error(
                    "problem.objective",
                    format!(
                        "file declares {} but {} was requested",
                        recorded.name(),
                        objective.name()
                    ),
                ));
            }
        }
        let inferred = self
            .sf
            .as_ref()
            .or(self.ss.as_ref())
            .map(TropMatrix::rows)
            .ok_or_else(|| field_error("problem.sf", "no constraint matrix given (sf or ss)"))?;
        let n = self.n_activities.unwrap_or(inferred);
        let problem = ProjectProblem {
            n_activities: n,
            sf_matrix: self.sf.clone(),
            ss_matrix: self.ss.clone(),
            due_dates: self.due.clone(),
            early_starts: self.early.clone(),
            objective,
        };
        problem.validate().map_err(|e| match e {
            crate::AlgebraError::InvalidProblem { field, message } => {
                field_error(&format!("problem.{field}"), message)
            }
            other => field_error("problem", other),
        })?;
        Ok(problem)
    }
}

/// Machine-readable result document: pretty JSON, newline-terminated.
pub fn result_to_json(result: &ScheduleResult) -> String {
    let mut s = serde_json::to_string_pretty(result).expect("schedule results serialize");
    s.push('\n');
    s
}

pub fn result_from_json(text: &str) -> Result<ScheduleResult, FormatError> {
    Ok(serde_json::from_str(text)?)
}
