//! `maxplus algebra`: closures, eigenvalues and residuals of a bare matrix.

use std::fmt::Write;

use anyhow::{anyhow, Context};
use clap::ValueEnum;
use maxplus::format::OutputMode;
use maxplus::linalg::{self, TropMatrix, TropVector};
use maxplus::{solvers, AlgebraError, Tolerance};
use serde::Deserialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// Tr(A), A*, A^× and the generator matrix A⁺
    Closure,
    /// Eigenvalue and eigenvector generators
    Eigen,
    /// Residual and approximate solutions of A⊗x = d
    Residual,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Options {
    tolerance: Option<f64>,
    output: Option<OutputMode>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    #[allow(dead_code)]
    version: Option<String>,
    matrix: TropMatrix,
    vector: Option<TropVector>,
    options: Option<Options>,
}

pub struct Document {
    pub matrix: TropMatrix,
    pub vector: Option<TropVector>,
    pub tolerance: Option<Tolerance>,
    pub output: Option<OutputMode>,
}

impl Document {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let raw: Raw = serde_json::from_str(text).context("invalid algebra document")?;
        let (tolerance, output) = match raw.options {
            Some(o) => (
                o.tolerance
                    .map(Tolerance::new)
                    .transpose()
                    .map_err(|e| anyhow!("field `options.tolerance`: {e}"))?,
                o.output,
            ),
            None => (None, None),
        };
        Ok(Document {
            matrix: raw.matrix,
            vector: raw.vector,
            tolerance,
            output,
        })
    }
}

fn field(e: AlgebraError, name: &str) -> anyhow::Error {
    anyhow!("field `{name}`: {e}")
}

fn indented(m: &TropMatrix) -> String {
    m.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

pub fn run(op: Op, doc: &Document, tol: Tolerance, mode: OutputMode) -> anyhow::Result<String> {
    let a = &doc.matrix;
    let machine = mode == OutputMode::Machine;
    let mut out = String::new();
    match op {
        Op::Closure => {
            let tr = linalg::big_trace(a).map_err(|e| field(e, "matrix"))?;
            let star = linalg::star(a).map_err(|e| field(e, "matrix"))?;
            let plus = linalg::plus_powers(a).map_err(|e| field(e, "matrix"))?;
            let generators = match linalg::generator(a, tol) {
                Ok(g) => Some(g),
                Err(AlgebraError::NoUnitDiagonalColumn) => None,
                Err(e) => return Err(field(e, "matrix")),
            };
            if machine {
                let doc = json!({
                    "big_trace": tr,
                    "star": star,
                    "plus": plus,
                    "generators": generators,
                });
                out = serde_json::to_string_pretty(&doc)? + "\n";
            } else {
                let _ = writeln!(out, "big trace: {tr}");
                let _ = writeln!(out, "star:\n{}", indented(&star).trim_end_matches('\n'));
                let _ = writeln!(out, "plus:\n{}", indented(&plus).trim_end_matches('\n'));
                match generators {
                    Some(g) => {
                        let _ =
                            writeln!(out, "generators:\n{}", indented(&g).trim_end_matches('\n'));
                    }
                    None => {
                        let _ = writeln!(out, "generators: none");
                    }
                }
            }
        }
        Op::Eigen => {
            let s = solvers::eigenvectors(a, tol).map_err(|e| field(e, "matrix"))?;
            if machine {
                out = serde_json::to_string_pretty(&s)? + "\n";
            } else {
                let _ = writeln!(out, "eigenvalue: {}", s.lambda);
                let _ = writeln!(
                    out,
                    "eigenvectors:\n{}",
                    indented(&s.eigen_generators).trim_end_matches('\n')
                );
            }
        }
        Op::Residual => {
            let d = doc
                .vector
                .as_ref()
                .ok_or_else(|| anyhow!("field `vector`: missing"))?;
            let r = solvers::solve_first_kind(a, d, tol).map_err(|e| match e {
                AlgebraError::IrregularInput(ref m) if m.contains("right-hand") => {
                    field(e, "vector")
                }
                AlgebraError::DimensionMismatch { .. } => field(e, "vector"),
                other => field(other, "matrix"),
            })?;
            if machine {
                out = serde_json::to_string_pretty(&r)? + "\n";
            } else {
                let _ = writeln!(out, "residual: {}", r.delta);
                let _ = writeln!(out, "solvable: {}", if r.is_exact() { "yes" } else { "no" });
                let _ = writeln!(out, "x0: {}  A⊗x0: {}", r.quasi_solution, r.quasi_image);
                let _ = writeln!(out, "x1: {}  A⊗x1: {}", r.under_solution, r.under_image);
                let _ = writeln!(out, "x2: {}  A⊗x2: {}", r.over_solution, r.over_image);
            }
        }
    }
    Ok(out)
}
