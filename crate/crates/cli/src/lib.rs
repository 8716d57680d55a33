//! Command-line front end: reads a JSON problem file, solves it and prints
//! the schedule as a table or as a JSON document.
//!
//! Exit status is 0 when the schedule meets every constraint (or describes
//! a family of such schedules), 2 when due dates can only be met
//! approximately, and 1 on any error.

mod algebra;
mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use maxplus::format::{self, OutputMode, ProblemFile};
use maxplus::scheduling::{self, Feasibility};
use maxplus::{Objective, ScheduleResult, Tolerance};

pub use render::{emit, human};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_APPROXIMATE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "maxplus",
    version,
    about = "Project scheduling with max-plus algebra"
)]
pub struct Cli {
    /// Comparison tolerance (overrides the file's options.tolerance)
    #[arg(long, global = true, value_name = "EPS", allow_negative_numbers = true)]
    pub tolerance: Option<f64>,

    /// Output format (overrides the file's options.output)
    #[arg(long, global = true, value_enum)]
    pub output: Option<Output>,

    /// Re-check the result against the constraints before printing it
    #[arg(long, global = true)]
    pub check: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Human,
    Machine,
}

impl From<Output> for OutputMode {
    fn from(o: Output) -> Self {
        match o {
            Output::Human => OutputMode::Human,
            Output::Machine => OutputMode::Machine,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Latest starts meeting due dates under Start-to-Finish lags
    SfLatest { file: PathBuf },
    /// Earliest starts under Start-to-Start lags and early start times
    SsEarliest { file: PathBuf },
    /// Latest starts under both Start-to-Finish and Start-to-Start lags
    MixedLatest { file: PathBuf },
    /// Schedules minimising the maximum flow time
    MinFlow { file: PathBuf },
    /// Matrix utilities on {"matrix": ..., "vector": ...} documents
    Algebra {
        #[arg(value_enum)]
        op: algebra::Op,
        file: PathBuf,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code. Output goes to `out`, diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn tolerance(cli: &Cli, from_file: Option<Tolerance>) -> anyhow::Result<Tolerance> {
    match cli.tolerance {
        Some(eps) => Tolerance::new(eps).map_err(|e| anyhow!("--tolerance: {e}")),
        None => Ok(from_file.unwrap_or_default()),
    }
}

fn mode(cli: &Cli, from_file: Option<OutputMode>) -> OutputMode {
    cli.output
        .map(OutputMode::from)
        .or(from_file)
        .unwrap_or(OutputMode::Human)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    let (objective, path) = match &cli.command {
        Command::SfLatest { file } => (Objective::LatestStart, file),
        Command::SsEarliest { file } => (Objective::EarliestStart, file),
        Command::MixedLatest { file } => (Objective::Mixed, file),
        Command::MinFlow { file } => (Objective::MinMaxFlowTime, file),
        Command::Algebra { op, file } => {
            let doc = algebra::Document::parse(&read(file)?)?;
            let tol = tolerance(cli, doc.tolerance)?;
            let text = algebra::run(*op, &doc, tol, mode(cli, doc.output))?;
            out.write_all(text.as_bytes())?;
            return Ok(EXIT_OK);
        }
    };

    let file = ProblemFile::parse(&read(path)?)
        .with_context(|| format!("invalid problem file {}", path.display()))?;
    let tol = tolerance(cli, file.options.tolerance)?;
    let problem = file
        .to_problem(objective)
        .with_context(|| format!("invalid problem file {}", path.display()))?;
    let result = problem.solve(tol).map_err(|e| solve_error(objective, e))?;

    if cli.check {
        let problems = scheduling::verify(&problem, &result, tol);
        if !problems.is_empty() {
            return Err(anyhow!(
                "result failed verification:\n  {}",
                problems.join("\n  ")
            ));
        }
    }
    out.write_all(emit(&result, mode(cli, file.options.output)).as_bytes())?;
    Ok(exit_code(&result))
}

/// Names the input a solver error is about.
fn solve_error(objective: Objective, e: maxplus::AlgebraError) -> anyhow::Error {
    use maxplus::AlgebraError::*;
    let field = match (&e, objective) {
        (InfeasibleCycles { .. }, _) => "problem.ss",
        (ReducibleMatrix { .. }, _) => "problem.sf",
        (IrregularInput(msg), _) if msg.contains("due") || msg.contains("right-hand") => {
            "problem.due"
        }
        (IrregularInput(_), _) => "problem.sf",
        (_, Objective::EarliestStart) => "problem.ss",
        _ => "problem",
    };
    anyhow!("field `{field}`: {e}")
}

pub fn exit_code(result: &ScheduleResult) -> i32 {
    match result.feasibility {
        Feasibility::Approximate { .. } => EXIT_APPROXIMATE,
        _ => EXIT_OK,
    }
}

/// Machine-readable document for `result`; re-exported for tests.
pub fn machine(result: &ScheduleResult) -> String {
    format::result_to_json(result)
}
