//! Check reports and their JSON / text renderings.
//!
//! Failures keep their residuals as exact values, so a symbolic report can be
//! specialized to a numeric ε after the fact ([`Report::eval_at`]).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Basis, Element};
use crate::scalar::{Rational, Scalar, ScalarError};

pub const SCHEMA_VERSION: u32 = 1;

/// The quantifier instantiation a failure belongs to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseInput {
    Basis(Vec<Basis>),
    Indices(Vec<i64>),
    /// A labelled sub-case, e.g. one parameter set of a family check.
    Labeled(String, Box<CaseInput>),
    Point(String),
}

impl CaseInput {
    pub fn basis(b: &[Basis]) -> Self {
        CaseInput::Basis(b.to_vec())
    }

    pub fn labeled(label: impl Into<String>, inner: CaseInput) -> Self {
        CaseInput::Labeled(label.into(), Box::new(inner))
    }

    pub fn render(&self) -> String {
        match self {
            CaseInput::Basis(bs) => {
                let parts: Vec<String> = bs.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(", "))
            }
            CaseInput::Indices(ix) => {
                let parts: Vec<String> = ix.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(", "))
            }
            CaseInput::Labeled(label, inner) => format!("{label}: {}", inner.render()),
            CaseInput::Point(p) => p.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Residual {
    Scalar(Scalar),
    Element(Element),
    Text(String),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Scalar(s) => s.is_zero(),
            Residual::Element(e) => e.is_zero(),
            Residual::Text(_) => false,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Residual::Scalar(s) => s.to_string(),
            Residual::Element(e) => e.to_string(),
            Residual::Text(t) => t.clone(),
        }
    }

    fn eval_at(&self, eps: &Rational) -> Result<Residual, ScalarError> {
        Ok(match self {
            Residual::Scalar(s) => Residual::Scalar(Scalar::from_rational(s.eval(eps)?)),
            Residual::Element(e) => Residual::Element(e.try_map_coeffs(|c| c.eval(eps).map(Scalar::from_rational))?),
            Residual::Text(t) => Residual::Text(t.clone()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub inputs: CaseInput,
    pub equation_id: String,
    pub residual: Residual,
}

impl Failure {
    pub fn new(inputs: CaseInput, equation_id: impl Into<String>, residual: Residual) -> Self {
        Self {
            inputs,
            equation_id: equation_id.into(),
            residual,
        }
    }
}

/// One transcribed equation whose value differs from its identity-derived
/// counterpart at a documented transcription discrepancy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub probe: String,
    pub inputs: CaseInput,
    pub equation_id: String,
    pub transcribed: Scalar,
    pub identity: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub shift: i64,
    pub unknowns: usize,
    pub equations: usize,
    pub nullity: usize,
    pub interior_dim: usize,
    pub family_dim: usize,
    pub matches_family: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Details {
    Grid {
        passing_points: Vec<String>,
    },
    CrossCheck {
        agreements: u64,
        discrepancies: Vec<Discrepancy>,
    },
    Theta {
        values: Vec<(i64, Rational)>,
        rank: usize,
        unknowns: usize,
        equations: usize,
    },
    Converse {
        interior: i64,
        shifts: Vec<ShiftOutcome>,
    },
}

impl Details {
    fn to_json(&self) -> Value {
        match self {
            Details::Grid { passing_points } => json!({ "passing_points": passing_points }),
            Details::CrossCheck {
                agreements,
                discrepancies,
            } => {
                let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
                for d in discrepancies {
                    *counts.entry(d.equation_id.as_str()).or_default() += 1;
                }
                let list: Vec<Value> = discrepancies
                    .iter()
                    .map(|d| {
                        json!({
                            "probe": d.probe,
                            "inputs": d.inputs.render(),
                            "equation_id": d.equation_id,
                            "transcribed": d.transcribed.to_string(),
                            "identity": d.identity.to_string(),
                        })
                    })
                    .collect();
                json!({
                    "agreements": agreements,
                    "discrepancy_counts": counts,
                    "discrepancies": list,
                })
            }
            Details::Theta {
                values,
                rank,
                unknowns,
                equations,
            } => {
                let vals: BTreeMap<String, String> =
                    values.iter().map(|(n, v)| (n.to_string(), v.to_string())).collect();
                json!({
                    "theta": vals,
                    "rank": rank,
                    "unknowns": unknowns,
                    "equations": equations,
                    "unique": rank == unknowns,
                })
            }
            Details::Converse { interior, shifts } => {
                let list: Vec<Value> = shifts
                    .iter()
                    .map(|s| {
                        json!({
                            "shift": s.shift,
                            "unknowns": s.unknowns,
                            "equations": s.equations,
                            "nullity": s.nullity,
                            "interior_dim": s.interior_dim,
                            "family_dim": s.family_dim,
                            "matches_family": s.matches_family,
                        })
                    })
                    .collect();
                json!({ "interior": interior, "shifts": list })
            }
        }
    }

    fn eval_at(&self, eps: &Rational) -> Result<Details, ScalarError> {
        Ok(match self {
            Details::CrossCheck {
                agreements,
                discrepancies,
            } => {
                let mut agreements = *agreements;
                let mut kept = Vec::new();
                for d in discrepancies {
                    let t = Scalar::from_rational(d.transcribed.eval(eps)?);
                    let i = Scalar::from_rational(d.identity.eval(eps)?);
                    if t == i {
                        agreements += 1;
                    } else {
                        kept.push(Discrepancy {
                            transcribed: t,
                            identity: i,
                            ..d.clone()
                        });
                    }
                }
                Details::CrossCheck {
                    agreements,
                    discrepancies: kept,
                }
            }
            other => other.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub check_name: String,
    pub window: i64,
    pub eps_mode: String,
    pub total_cases: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
    pub details: Option<Details>,
}

#[derive(Serialize)]
struct FailureJson {
    inputs: String,
    equation_id: String,
    residual: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: u32,
    check_name: &'a str,
    window: i64,
    eps_mode: &'a str,
    total_cases: u64,
    passed: bool,
    failures: Vec<FailureJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    details: Option<Value>,
}

impl Report {
    /// Sorts the failures and derives `passed` from them.
    pub fn new(
        check_name: impl Into<String>,
        window: i64,
        eps_mode: impl Into<String>,
        total_cases: u64,
        mut failures: Vec<Failure>,
    ) -> Self {
        failures.sort_by(|a, b| (&a.inputs, &a.equation_id).cmp(&(&b.inputs, &b.equation_id)));
        Self {
            check_name: check_name.into(),
            window,
            eps_mode: eps_mode.into(),
            total_cases,
            passed: failures.is_empty(),
            failures,
            details: None,
        }
    }

    pub fn with_details(mut self, details: Details) -> Self {
        self.details = Some(details);
        self
    }

    pub fn to_json(&self) -> Value {
        let body = ReportJson {
            schema: SCHEMA_VERSION,
            check_name: &self.check_name,
            window: self.window,
            eps_mode: &self.eps_mode,
            total_cases: self.total_cases,
            passed: self.passed,
            failures: self
                .failures
                .iter()
                .map(|f| FailureJson {
                    inputs: f.inputs.render(),
                    equation_id: f.equation_id.clone(),
                    residual: f.residual.render(),
                })
                .collect(),
            details: self.details.as_ref().map(Details::to_json),
        };
        serde_json::to_value(body).expect("report serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }

    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} {} window={} eps={} cases={} failures={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check_name,
            self.window,
            self.eps_mode,
            self.total_cases,
            self.failures.len()
        );
        match &self.details {
            Some(Details::Grid { passing_points }) => {
                let _ = write!(line, " passing_points=[{}]", passing_points.join("; "));
            }
            Some(Details::CrossCheck {
                agreements,
                discrepancies,
            }) => {
                let _ = write!(line, " agreements={agreements} discrepancies={}", discrepancies.len());
            }
            Some(Details::Theta { rank, unknowns, .. }) => {
                let _ = write!(line, " rank={rank}/{unknowns}");
            }
            Some(Details::Converse { shifts, .. }) => {
                let ok = shifts.iter().filter(|s| s.matches_family).count();
                let _ = write!(line, " shifts_matching={ok}/{}", shifts.len());
            }
            None => {}
        }
        line
    }

    /// Human-readable rendering: the summary line plus up to `limit`
    /// failures.
    pub fn to_text(&self, limit: usize) -> String {
        let mut out = self.summary_line();
        for f in self.failures.iter().take(limit) {
            let _ = write!(
                out,
                "\n  {} [{}] residual = {}",
                f.inputs.render(),
                f.equation_id,
                f.residual.render()
            );
        }
        if self.failures.len() > limit {
            let _ = write!(out, "\n  ... {} more", self.failures.len() - limit);
        }
        out
    }

    /// Specializes a symbolic report to `e = eps`: residuals are evaluated,
    /// the ones that vanish are dropped and `passed` is recomputed. Grid and
    /// solver details carry no ε-dependent values and are kept as is.
    pub fn eval_at(&self, eps: &Rational) -> Result<Report, ScalarError> {
        let mut failures = Vec::new();
        for f in &self.failures {
            let r = f.residual.eval_at(eps)?;
            if !r.is_zero() {
                failures.push(Failure {
                    residual: r,
                    ..f.clone()
                });
            }
        }
        let mut out = Report::new(
            self.check_name.clone(),
            self.window,
            eps.to_string(),
            self.total_cases,
            failures,
        );
        if let Some(d) = &self.details {
            out.details = Some(d.eval_at(eps)?);
        }
        if let Some(Details::Grid { .. }) = &out.details {
            out.passed = self.passed && out.failures.is_empty();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_are_sorted_and_drive_passed() {
        let f = |b: i64, id: &str| Failure::new(CaseInput::basis(&[Basis::D(b)]), id, Residual::Scalar(Scalar::one()));
        let r = Report::new("x", 1, "symbolic", 3, vec![f(2, "a"), f(-1, "b"), f(-1, "a")]);
        assert!(!r.passed);
        let order: Vec<String> = r
            .failures
            .iter()
            .map(|f| format!("{} {}", f.inputs.render(), f.equation_id))
            .collect();
        assert_eq!(order, ["(d(-1)) a", "(d(-1)) b", "(d(2)) a"]);
        assert!(Report::new("x", 1, "symbolic", 3, vec![]).passed);
    }

    #[test]
    fn json_shape() {
        let r = Report::new(
            "jacobi",
            2,
            "symbolic",
            216,
            vec![Failure::new(
                CaseInput::basis(&[Basis::D(1), Basis::H(0)]),
                "jacobi",
                Residual::Element(Element::term(Basis::D(3), Scalar::eps())),
            )],
        );
        let v = r.to_json();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["passed"], false);
        assert_eq!(v["failures"][0]["inputs"], "(d(1), h(1/2))");
        assert_eq!(v["failures"][0]["residual"], "(e)*d(3)");
        assert!(v.get("details").is_none());
    }

    #[test]
    fn eval_drops_vanishing_residuals() {
        let vanishing = Scalar::eps() - Scalar::from_ratio(2, 5);
        let r = Report::new(
            "x",
            1,
            "symbolic",
            2,
            vec![
                Failure::new(CaseInput::Indices(vec![0]), "a", Residual::Scalar(vanishing)),
                Failure::new(CaseInput::Indices(vec![1]), "a", Residual::Scalar(Scalar::eps())),
            ],
        );
        let n = r.eval_at(&crate::scalar::rat(2, 5)).unwrap();
        assert_eq!(n.failures.len(), 1);
        assert_eq!(n.failures[0].residual.render(), "2/5");
        assert_eq!(n.eps_mode, "2/5");
    }
}
