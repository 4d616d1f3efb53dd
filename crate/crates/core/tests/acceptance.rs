//! Acceptance gate: one PASS/FAIL line per criterion, exact arithmetic.
//!
//! Runs as a plain binary so the lines are always printed. Criteria known to
//! fail for reasons outside the implementation are listed in
//! `EXPECTED_FAILURES`; the process exits non-zero if the observed set of
//! failing criteria differs from that list in either direction.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use mhv_core::algebra::{bracket, window_basis};
use mhv_core::bider::{
    bider_eval, check_bider_family, check_commuting, commuting_control, commuting_samples, family_samples,
    lsa_bider_grid, lsa_bider_sides, post_lie_grid, triviality_grid, BiderParams,
};
use mhv_core::coeff::{check_ast, check_cross, check_star, check_theta, solve_theta, DOCUMENTED_DISCREPANCIES};
use mhv_core::report::{CaseInput, Details};
use mhv_core::scalar::rat;
use mhv_core::suite::{check_antisym, check_compatibility, check_jacobi, check_lsa_identity};
use mhv_core::{
    lsa::lsa_commutator, parse_scalar, run_suite, AlgebraMode, Basis, CheckName, Element, EpsMode, Lsa, Parallelism,
    Report, RunConfig, Scalar,
};

/// 4: the family is not a biderivation of the algebra with center.
/// 8: two printed closed forms disagree with the exact product.
/// 10: e = 1/7 is not admissible at window 4.
const EXPECTED_FAILURES: [u32; 3] = [4, 8, 10];

const PAR: Parallelism = Parallelism::Auto;

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn el(b: Basis) -> Element {
    Element::basis(b)
}

fn s(text: &str) -> Scalar {
    parse_scalar(text).expect("literal scalar")
}

fn grid_points(r: &Report) -> Vec<String> {
    match &r.details {
        Some(Details::Grid { passing_points }) => passing_points.clone(),
        _ => Vec::new(),
    }
}

fn lie_identities() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut pass = true;
    for mode in [AlgebraMode::Full, AlgebraMode::Centerless] {
        for r in [
            check_jacobi(6, mode, Parallelism::Sequential),
            check_antisym(6, mode, Parallelism::Sequential),
        ] {
            pass &= r.passed;
            parts.push(format!("{}/{mode:?} {} cases", r.check_name, r.total_cases));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(pass, format!("{} ({secs:.1}s sequential)", parts.join(", ")))
}

fn left_symmetric() -> Outcome {
    let r = check_lsa_identity(5, &EpsMode::Symbolic, PAR).expect("symbolic is always admissible");
    outcome(
        r.passed,
        format!("{} triples, {} failures", r.total_cases, r.failures.len()),
    )
}

fn compatibility() -> Outcome {
    let r = check_compatibility(6, &EpsMode::Symbolic, PAR).expect("symbolic is always admissible");
    let (x, y) = (el(Basis::D(2)), el(Basis::D(-2)));
    let comm = lsa_commutator(&x, &y, &EpsMode::Symbolic).expect("symbolic");
    let central = comm.coeff(Basis::C);
    let spot = central == Scalar::from_ratio(1, 2) && comm == bracket(&x, &y, AlgebraMode::Full).expect("bracket");
    outcome(
        r.passed && spot,
        format!(
            "{} pairs, {} failures; [d(2),d(-2)] central coefficient {central}",
            r.total_cases,
            r.failures.len()
        ),
    )
}

fn biderivation_family() -> Outcome {
    let samples = family_samples();
    let full = check_bider_family(&samples, 5, AlgebraMode::Full, PAR);
    let centerless = check_bider_family(&samples, 5, AlgebraMode::Centerless, PAR);
    let support_ok = samples.iter().all(|p| p.omega().keys().all(|k| k.abs() <= 3));
    let central_fail = full
        .failures
        .iter()
        .filter(|f| f.equation_id == "bider.central")
        .count();
    let mut annihilates = central_fail == 0;
    for p in &samples {
        for b in window_basis(5, AlgebraMode::Full) {
            for z in [Basis::C, Basis::L] {
                annihilates &= bider_eval(p, &el(b), &el(z)).is_zero() && bider_eval(p, &el(z), &el(b)).is_zero();
            }
        }
    }
    let failing_sets: BTreeSet<String> = full
        .failures
        .iter()
        .filter_map(|f| match &f.inputs {
            CaseInput::Labeled(label, _) => Some(label.clone()),
            _ => None,
        })
        .collect();
    let example = full.failures.first().map(|f| {
        format!(
            "; e.g. {} {} = {}",
            f.inputs.render(),
            f.equation_id,
            f.residual.render()
        )
    });
    outcome(
        full.passed && support_ok && annihilates,
        format!(
            "full algebra: {}/{} sets pass, {} failures{}; modulo the center: {}; center annihilated: {}",
            samples.len() - failing_sets.len(),
            samples.len(),
            full.failures.len(),
            example.unwrap_or_default(),
            if centerless.passed { "all sets pass" } else { "fails" },
            annihilates
        ),
    )
}

fn closed_forms() -> Outcome {
    let eps = EpsMode::Symbolic;
    let star = check_star(5, &eps, PAR).expect("symbolic");
    let ast = check_ast(5, &eps, PAR).expect("symbolic");
    let cross = check_cross(5, &eps, PAR).expect("symbolic");
    let (agreements, ids) = match &cross.details {
        Some(Details::CrossCheck {
            agreements,
            discrepancies,
        }) => {
            let ids: BTreeSet<&str> = discrepancies.iter().map(|d| d.equation_id.as_str()).collect();
            (*agreements, ids.into_iter().map(String::from).collect::<Vec<_>>())
        }
        _ => (0, vec!["missing details".to_string()]),
    };
    let documented = ids.len() <= 3 && ids.iter().all(|id| DOCUMENTED_DISCREPANCIES.contains(&id.as_str()));
    outcome(
        star.passed && ast.passed && cross.passed && documented,
        format!(
            "star {} + ast {} cases clean; identity residuals {}; cross-check {agreements} agreements, discrepancies only in {ids:?}",
            star.total_cases,
            ast.total_cases,
            if cross.failures.is_empty() { "vanish" } else { "do not vanish" },
        ),
    )
}

fn theta() -> Outcome {
    let report = check_theta(5);
    let table = match solve_theta(5) {
        Ok(t) => t,
        Err(e) => return outcome(false, format!("no unique solution: {e}")),
    };
    let closed = table.values.iter().all(|(n, v)| *v == rat(2 * n + 1, 4));
    let first = table.get(1).cloned() == Some(rat(3, 4));
    outcome(
        report.passed && closed && first,
        format!(
            "theta(1) = {}, rank {}/{} over {} equations",
            table.values[&1], table.rank, table.unknowns, table.equations
        ),
    )
}

fn post_lie() -> Outcome {
    let grid = triviality_grid();
    let r = post_lie_grid(&grid, 4, PAR);
    let points = grid_points(&r);
    let only_trivial = points == [grid[0].label()];
    outcome(
        r.passed && only_trivial,
        format!("{} grid points, passing {points:?}", r.total_cases),
    )
}

fn lsa_biderivations() -> Outcome {
    let grid = triviality_grid();
    let eps = EpsMode::Symbolic;
    let r = lsa_bider_grid(&grid, 4, &eps, PAR).expect("symbolic");
    let points = grid_points(&r);
    let structural = r.passed && points == [grid[0].label()];

    let lsa = Lsa::new(eps);
    let (x, y, z) = (Basis::D(2), Basis::D(1), Basis::D(3));
    let lambda = BiderParams::new(Scalar::one(), []);
    let [(lhs, rhs), _] = lsa_bider_sides(&lambda, &lsa, x, y, z).expect("symbolic");
    let (d6_lhs, d6_rhs) = (lhs.coeff(Basis::D(6)), rhs.coeff(Basis::D(6)));
    let printed_d6 = s("8*(1+3*e)/(1+6*e) + (1+e)/(1+6*e)");
    let d6_one_side = d6_lhs.is_zero() && !d6_rhs.is_zero();
    let d6_printed = d6_rhs == printed_d6 || d6_rhs == -printed_d6.clone();

    let mu = BiderParams::new(Scalar::zero(), [(0, Scalar::one())]);
    let [(lhs, rhs), _] = lsa_bider_sides(&mu, &lsa, x, y, z).expect("symbolic");
    let (h_lhs, h_rhs) = (lhs.coeff(Basis::H(6)), rhs.coeff(Basis::H(6)));
    let h_lhs_ok = h_lhs == s("-(1+e)/(1+3*e)*(1/2)");
    let h_rhs_printed = h_rhs == s("-5/2");

    outcome(
        structural && d6_one_side && d6_printed && h_lhs_ok && h_rhs_printed,
        format!(
            "passing {points:?}; witness (d(2),d(1),d(3)) at lambda=1: d(6) sides {d6_lhs} vs {d6_rhs} (printed {printed_d6}: {}); \
             at mu_0=1: h(13/2) sides {h_lhs} vs {h_rhs} (printed -5/2: {})",
            if d6_printed { "match" } else { "mismatch" },
            if h_rhs_printed { "match" } else { "mismatch" },
        ),
    )
}

fn commuting() -> Outcome {
    let samples = commuting_samples();
    let reports: Vec<Report> = samples.iter().map(|m| check_commuting(m, 5, PAR)).collect();
    let all_pass = samples.len() == 3 && reports.iter().all(|r| r.passed);
    let control = check_commuting(&commuting_control, 5, PAR);
    let witness = CaseInput::basis(&[Basis::D(1), Basis::D(2)]);
    let hit = control.failures.iter().find(|f| f.inputs == witness);
    outcome(
        all_pass && !control.passed && hit.is_some(),
        format!(
            "{} samples pass {} pairs each; raw table fails at {} with residual {}",
            samples.len(),
            reports.first().map_or(0, |r| r.total_cases),
            witness.render(),
            hit.map_or("none".into(), |f| f.residual.render()),
        ),
    )
}

fn coherence() -> Outcome {
    let window = 4;
    let symbolic = run_suite(&RunConfig {
        window,
        checks: CheckName::ALL.to_vec(),
        ..RunConfig::default()
    })
    .expect("symbolic run");
    let mut pass = true;
    let mut parts = Vec::new();
    for (num, den) in [(1, 7), (2, 5), (-3, 4)] {
        let eps = rat(num, den);
        let numeric = EpsMode::numeric(eps.clone()).map(|mode| {
            run_suite(&RunConfig {
                window,
                eps: mode,
                checks: CheckName::ALL.to_vec(),
                ..RunConfig::default()
            })
        });
        match numeric {
            Ok(Ok(reports)) => {
                let same = symbolic.len() == reports.len()
                    && symbolic
                        .iter()
                        .zip(&reports)
                        .all(|(s, n)| s.eval_at(&eps).map(|e| e.to_json_string()).ok() == Some(n.to_json_string()));
                pass &= same;
                parts.push(format!("{eps}: {}", if same { "identical" } else { "differs" }));
            }
            Ok(Err(e)) => {
                pass = false;
                parts.push(format!(
                    "{eps}: {e}: {}",
                    std::error::Error::source(&e).map_or(String::new(), |s| s.to_string())
                ));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{eps}: {e}"));
            }
        }
    }
    outcome(pass, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "Jacobi and antisymmetry on [-6,6]", lie_identities),
        (2, "left-symmetric identity on [-5,5]", left_symmetric),
        (3, "commutator equals bracket on [-6,6]", compatibility),
        (4, "biderivation family at window 5", biderivation_family),
        (5, "coefficient equations and cross-check", closed_forms),
        (6, "theta system at window 5", theta),
        (7, "commutative post-Lie grid at window 4", post_lie),
        (8, "LSA-biderivation grid at window 4", lsa_biderivations),
        (9, "commuting maps at window 5", commuting),
        (10, "numeric and symbolic runs agree", coherence),
    ];
    let mut failed = BTreeSet::new();
    for (n, title, run) in criteria {
        let o = run();
        println!("{} #{n} {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed.insert(n);
        }
    }
    let expected: BTreeSet<u32> = EXPECTED_FAILURES.into_iter().collect();
    if failed == expected {
        println!("acceptance: failing criteria {failed:?} match the expected set");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}, expected {expected:?}");
        ExitCode::FAILURE
    }
}
