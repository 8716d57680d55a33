//! Acceptance gate. Every criterion runs at ε = 1e-9 and reports one line;
//! the process exits non-zero if any of them fails.

use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use maxplus::linalg::{self, TropMatrix, TropVector};
use maxplus::scheduling::{self, Feasibility};
use maxplus::solvers;
use maxplus::{Tolerance, TropScalar};
use maxplus_oracle::checks;

const TOL: Tolerance = Tolerance(1e-9);
const Z: f64 = f64::NEG_INFINITY;

type Check = Result<String, String>;
type Suite = Box<dyn Fn() -> Result<checks::Report, String>>;
type Criterion = (&'static str, fn() -> Check);

fn m(rows: &[&[f64]]) -> TropMatrix {
    TropMatrix::from_ieee_rows(rows).unwrap()
}

fn v(values: &[f64]) -> TropVector {
    TropVector::from_finite(values)
}

fn s(x: f64) -> TropScalar {
    TropScalar::finite(x)
}

fn expect_vec(label: &str, got: &TropVector, want: &TropVector) -> Result<(), String> {
    if got.approx_eq(want, TOL) {
        Ok(())
    } else {
        Err(format!("{label} = {got}, expected {want}"))
    }
}

fn expect_mat(label: &str, got: &TropMatrix, want: &TropMatrix) -> Result<(), String> {
    if got.approx_eq(want, TOL) {
        Ok(())
    } else {
        Err(format!("{label} =\n{got}\nexpected\n{want}"))
    }
}

fn expect_scalar(label: &str, got: TropScalar, want: TropScalar) -> Result<(), String> {
    if got.approx_eq(want, TOL) {
        Ok(())
    } else {
        Err(format!("{label} = {got}, expected {want}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn sf() -> TropMatrix {
    m(&[
        &[8.0, 10.0, Z, Z],
        &[Z, 5.0, 4.0, 8.0],
        &[6.0, 12.0, 11.0, 7.0],
        &[Z, Z, Z, 12.0],
    ])
}

fn ss() -> TropMatrix {
    m(&[
        &[0.0, -2.0, Z, Z],
        &[Z, 0.0, 3.0, -1.0],
        &[-1.0, Z, 0.0, -4.0],
        &[2.0, Z, Z, 0.0],
    ])
}

fn ss_generators() -> TropMatrix {
    m(&[&[-2.0, -3.0], &[0.0, -1.0], &[-3.0, -4.0], &[0.0, 0.0]])
}

fn flow() -> TropMatrix {
    m(&[&[2.0, 4.0, 4.0], &[2.0, 3.0, 5.0], &[3.0, 2.0, 3.0]])
}

fn consistent_due_dates() -> Check {
    let d = v(&[14.0, 11.0, 16.0, 15.0]);
    let out = solvers::solve_first_kind(&sf(), &d, TOL).map_err(err)?;
    expect_scalar("Δ", out.delta, TropScalar::ONE)?;
    let x = out.exact_max_solution.ok_or("no exact solution")?;
    expect_vec("x", &x, &v(&[6.0, 4.0, 5.0, 3.0]))?;
    expect_vec("A⊗x", &sf().apply(&x).map_err(err)?, &d)?;
    Ok("Δ = 0, x = (6, 4, 5, 3)".into())
}

fn inconsistent_due_dates() -> Check {
    let d = v(&[15.0, 15.0, 15.0, 15.0]);
    let a = sf();
    let out = solvers::solve_first_kind(&a, &d, TOL).map_err(err)?;
    expect_scalar("Δ", out.delta, s(4.0))?;
    if out.is_exact() {
        return Err("reported as exactly solvable".into());
    }
    let triples = [
        (
            "x₀",
            &out.quasi_solution,
            &out.quasi_image,
            [9.0, 5.0, 6.0, 5.0],
            [17.0, 13.0, 17.0, 17.0],
            2.0,
        ),
        (
            "x₁",
            &out.under_solution,
            &out.under_image,
            [7.0, 3.0, 4.0, 3.0],
            [15.0, 11.0, 15.0, 15.0],
            4.0,
        ),
        (
            "x₂",
            &out.over_solution,
            &out.over_image,
            [11.0, 7.0, 8.0, 7.0],
            [19.0, 15.0, 19.0, 19.0],
            4.0,
        ),
    ];
    for (label, x, y, want_x, want_y, rho) in triples {
        expect_vec(label, x, &v(&want_x))?;
        expect_vec(&format!("A⊗{label}"), y, &v(&want_y))?;
        expect_vec(
            &format!("A⊗{label} recomputed"),
            &a.apply(x).map_err(err)?,
            y,
        )?;
        expect_scalar(
            &format!("ρ(A⊗{label}, d)"),
            y.metric(&d).map_err(err)?,
            s(rho),
        )?;
    }
    // the schedule layer reports the same and flags it as approximate
    let r = scheduling::latest_start_sf(&a, &d, TOL).map_err(err)?;
    if r.feasibility != (Feasibility::Approximate { delta: s(4.0) }) {
        return Err(format!("schedule feasibility {:?}", r.feasibility));
    }
    Ok("Δ = 4, x₀/x₁/x₂ and deviations 2/4/4".into())
}

fn start_to_start() -> Check {
    let a = ss();
    expect_scalar(
        "Tr(A)",
        linalg::big_trace(&a).map_err(err)?,
        TropScalar::ONE,
    )?;
    let expected_closure = m(&[
        &[0.0, -2.0, 1.0, -3.0],
        &[2.0, 0.0, 3.0, -1.0],
        &[-1.0, -3.0, 0.0, -4.0],
        &[2.0, 0.0, 3.0, 0.0],
    ]);
    expect_mat("A*", &linalg::star(&a).map_err(err)?, &expected_closure)?;
    expect_mat(
        "A^×",
        &linalg::plus_powers(&a).map_err(err)?,
        &expected_closure,
    )?;
    expect_mat(
        "A⁺",
        &linalg::generator(&a, TOL).map_err(err)?,
        &ss_generators(),
    )?;
    let b2 = v(&[1.0, 1.0, 2.0, 1.0]);
    expect_vec(
        "A*b₂",
        &linalg::star(&a).map_err(err)?.apply(&b2).map_err(err)?,
        &v(&[3.0, 5.0, 2.0, 5.0]),
    )?;

    let out = solvers::solve_bellman(&a, &b2, TOL).map_err(err)?;
    if out.classification != solvers::BellmanClass::SolutionFamily {
        return Err(format!("classified {:?}", out.classification));
    }
    Ok("Tr = 0, A* = A^× and A⁺ match, A*b₂ = (3, 5, 2, 5)".into())
}

fn mixed() -> Check {
    let d = v(&[13.0, 11.0, 15.0, 15.0]);
    let composite = sf().mul(&ss_generators()).map_err(err)?;
    expect_mat(
        "A₁A₂⁺",
        &composite,
        &m(&[&[10.0, 9.0], &[8.0, 8.0], &[12.0, 11.0], &[12.0, 12.0]]),
    )?;
    let coeffs = solvers::solve_first_kind_inequality(&composite, &d).map_err(err)?;
    expect_vec("v", &coeffs, &v(&[3.0, 3.0]))?;

    let r = scheduling::latest_start_mixed(&sf(), &ss(), &d, TOL).map_err(err)?;
    let x = &r.initiation;
    expect_vec("x", x, &v(&[1.0, 3.0, 0.0, 3.0]))?;
    expect_vec("A₂⊗x", &ss().apply(x).map_err(err)?, x)?;
    let y = sf().apply(x).map_err(err)?;
    if !y.approx_leq(&d, TOL) {
        return Err(format!("A₁⊗x = {y} exceeds d = {d}"));
    }
    Ok("v = (3, 3), x = (1, 3, 0, 3), A₂⊗x = x, A₁⊗x ≤ d".into())
}

fn flow_time() -> Check {
    let a = flow();
    let d = v(&[9.0, 8.0, 9.0]);
    let lambda = solvers::eigenvalue(&a).map_err(err)?;
    expect_scalar("λ", lambda, s(4.0))?;
    let scaled = a.scale(lambda.inv().map_err(err)?);
    let expected_closure = m(&[&[0.0, 0.0, 1.0], &[0.0, 0.0, 1.0], &[-1.0, -1.0, 0.0]]);
    expect_mat(
        "A_λ*",
        &linalg::star(&scaled).map_err(err)?,
        &expected_closure,
    )?;
    expect_mat(
        "A_λ^×",
        &linalg::plus_powers(&scaled).map_err(err)?,
        &expected_closure,
    )?;
    let g = linalg::generator(&scaled, TOL).map_err(err)?;
    expect_mat("A_λ⁺", &g, &m(&[&[1.0], &[1.0], &[0.0]]))?;
    expect_mat(
        "AA_λ⁺",
        &a.mul(&g).map_err(err)?,
        &m(&[&[5.0], &[5.0], &[4.0]]),
    )?;

    let r = scheduling::min_flow_time(&a, Some(&d), TOL).map_err(err)?;
    expect_vec("x", &r.initiation, &v(&[4.0, 4.0, 3.0]))?;
    let y = a.apply(&r.initiation).map_err(err)?;
    let max_flow = y
        .iter()
        .zip(&r.initiation)
        .map(|(y, x)| y.value().unwrap() - x.value().unwrap())
        .fold(f64::NEG_INFINITY, f64::max);
    expect_scalar("max flow time", s(max_flow), s(4.0))?;
    if !y.approx_leq(&d, TOL) {
        return Err(format!("A⊗x = {y} exceeds d = {d}"));
    }
    Ok("λ = 4, A_λ⁺ = (1, 1, 0), x = (4, 4, 3), max flow time 4".into())
}

fn property_suites() -> Check {
    let suites: [(&str, Suite); 6] = [
        (
            "(a) metric",
            Box::new(|| checks::metric_suite(1000, 0xA, TOL)),
        ),
        (
            "(b) first kind",
            Box::new(|| checks::first_kind_suite(200, 6, 0xB, TOL)),
        ),
        (
            "(c) bellman",
            Box::new(|| checks::bellman_suite(150, 100, 0xC, TOL)),
        ),
        (
            "(d) eigenvalue",
            Box::new(|| checks::eigenvalue_suite(200, 8, 0xD, TOL)),
        ),
        (
            "(e) spectral",
            Box::new(|| checks::spectral_suite(30, 1000, 0xE, TOL)),
        ),
        (
            "(f) closure",
            Box::new(|| checks::closure_suite(200, 6, 0xF, TOL)),
        ),
    ];
    let mut summary = Vec::new();
    for (name, run) in suites {
        let r = run().map_err(|e| format!("{name}: {e}"))?;
        println!(
            "    {name}: {} instances, {} assertions",
            r.instances, r.assertions
        );
        summary.push(format!("{}", r.instances));
    }
    Ok(format!("instances {}", summary.join("/")))
}

fn cli_goldens() -> Check {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let cases = [
        ("sec41_d1", "sf-latest", 0),
        ("sec41_d2", "sf-latest", 2),
        ("sec42", "ss-earliest", 0),
        ("sec43", "mixed-latest", 0),
        ("sec44", "min-flow", 0),
    ];
    for (name, cmd, code) in cases {
        let input = root.join("problems").join(format!("{name}.json"));
        let golden =
            fs::read(root.join("tests/golden").join(format!("{name}.json"))).map_err(err)?;
        let mut runs = Vec::new();
        for _ in 0..2 {
            let out = Command::new(env!("CARGO_BIN_EXE_maxplus"))
                .args(["--tolerance", "1e-9", "--output", "machine", cmd])
                .arg(&input)
                .output()
                .map_err(err)?;
            if out.status.code() != Some(code) {
                return Err(format!(
                    "{name}: exit {:?}, expected {code}",
                    out.status.code()
                ));
            }
            runs.push(out.stdout);
        }
        if runs[0] != runs[1] {
            return Err(format!("{name}: output differs between runs"));
        }
        if runs[0] != golden {
            return Err(format!("{name}: output differs from golden"));
        }
    }
    Ok("five goldens byte-identical, exit codes 0/2/0/0/0".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("latest starts, consistent due dates", consistent_due_dates),
        (
            "latest starts, inconsistent due dates",
            inconsistent_due_dates,
        ),
        ("earliest starts, Start-to-Start lags", start_to_start),
        ("latest starts, mixed lags", mixed),
        ("minimum maximum flow time", flow_time),
        ("randomised property suites", property_suites),
        ("command-line goldens", cli_goldens),
    ];
    let started = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed at eps = {:e} in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        TOL.eps(),
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
