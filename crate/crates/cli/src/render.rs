use std::fmt::Write;

use maxplus::format::{self, OutputMode};
use maxplus::scheduling::{Feasibility, ScheduleCandidate};
use maxplus::{Exponent, ScheduleResult, TropMatrix, TropScalar, TropVector};

/// Renders `result` as a table (human) or JSON document (machine).
pub fn emit(result: &ScheduleResult, mode: OutputMode) -> String {
    match mode {
        OutputMode::Human => human(result),
        OutputMode::Machine => format::result_to_json(result),
    }
}

fn indent(m: &TropMatrix) -> String {
    m.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

fn table(out: &mut String, start: &TropVector, finish: Option<&TropVector>) {
    let header = ["activity", "start", "finish", "flow time"];
    let rows: Vec<[String; 4]> = (0..start.len())
        .map(|i| {
            let x = start[i];
            let (y, flow) = match finish {
                Some(f) => {
                    let y = f[i];
                    let flow = match (y.value(), x.value()) {
                        (Some(y), Some(x)) => TropScalar::finite(y - x).to_string(),
                        _ => "-".to_string(),
                    };
                    (y.to_string(), flow)
                }
                None => ("-".to_string(), "-".to_string()),
            };
            [(i + 1).to_string(), x.to_string(), y, flow]
        })
        .collect();
    let widths: Vec<usize> = (0..4)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |cells: [&str; 4]| {
        let cols: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        cols.join("  ")
    };
    let _ = writeln!(out, "{}", line(header));
    for r in &rows {
        let _ = writeln!(out, "{}", line([&r[0], &r[1], &r[2], &r[3]]));
    }
}

fn candidate(out: &mut String, label: &str, c: &ScheduleCandidate) {
    let _ = writeln!(out, "  {label}: start {}  finish {}", c.start, c.finish);
}

/// Aligned table of start, finish and flow time per activity, followed by
/// whatever the result carries beyond a single schedule.
pub fn human(result: &ScheduleResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "objective: {}", result.objective.name());
    let feasibility = match &result.feasibility {
        Feasibility::Exact => "exact".to_string(),
        Feasibility::Approximate { delta } => format!("approximate (residual {delta})"),
        Feasibility::Family => "family of schedules".to_string(),
        Feasibility::Feasible => "feasible".to_string(),
    };
    let _ = writeln!(out, "feasibility: {feasibility}");

    let d = &result.diagnostics;
    for (label, value) in [
        ("residual", d.residual),
        ("big trace", d.big_trace),
        ("eigenvalue", d.eigenvalue),
        ("max flow time", d.max_flow_time),
    ] {
        if let Some(v) = value {
            let _ = writeln!(out, "{label}: {v}");
        }
    }
    out.push('\n');
    table(&mut out, &result.initiation, result.completion.as_ref());

    if let (Some(a), Feasibility::Approximate { delta }) =
        (&result.approximation, &result.feasibility)
    {
        let half = delta.pow(Exponent::new(1, 2)).unwrap_or(*delta);
        out.push('\n');
        let _ = writeln!(out, "due dates cannot all be met; approximate schedules:");
        candidate(&mut out, "x0 (least deviation)", &a.quasi);
        candidate(&mut out, "x1 (latest meeting due dates)", &a.under);
        candidate(&mut out, "x2 (earliest reaching due dates)", &a.over);
        let _ = writeln!(
            out,
            "suggested due dates: {} (deviation {half})",
            a.quasi.finish
        );
    }

    out.push('\n');
    match &result.family {
        Some(f) if f.generators.cols() > 0 => {
            match &f.particular {
                Some(p) => {
                    let _ = writeln!(out, "family: particular ⊕ generators⊗v");
                    let _ = writeln!(out, "particular: {p}");
                }
                None => {
                    let _ = writeln!(out, "family: generators⊗v");
                }
            }
            let _ = writeln!(out, "generators:");
            out.push_str(&indent(&f.generators));
        }
        _ => {
            let _ = writeln!(out, "family: none");
        }
    }
    if let Some(g) = &result.generator_solution {
        let _ = writeln!(out, "generators:");
        out.push_str(&indent(&g.generators));
        let _ = writeln!(out, "constraint matrix times generators:");
        out.push_str(&indent(&g.composite));
        let _ = writeln!(out, "coefficients: {}", g.coefficients);
    }
    out
}
