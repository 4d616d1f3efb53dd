//! Orchestration of every window check behind one configuration.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{
    bracket_basis, bracket_unchecked, grading_degree, window_basis, AlgebraMode, Basis, Element, Grade,
};
use crate::bider::{
    check_bider_family, check_commuting_family, commuting_samples, family_samples, lsa_bider_grid, post_lie_grid,
    triviality_grid,
};
use crate::coeff::{check_ast, check_cross, check_star, check_theta, coeff_reach};
use crate::converse::check_converse;
use crate::exec::{pairs, triples, Parallelism};
use crate::lsa::{EpsMode, Lsa, LsaError};
use crate::report::{CaseInput, Failure, Report, Residual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    Jacobi,
    Antisym,
    Grading,
    LsaIdentity,
    Compatibility,
    BiderFamily,
    BiderGrid,
    Commuting,
    PostlieGrid,
    LsaBiderGrid,
    Star,
    Ast,
    CrossCheck,
    SolveTheta,
}

impl CheckName {
    pub const ALL: [CheckName; 14] = [
        CheckName::Jacobi,
        CheckName::Antisym,
        CheckName::Grading,
        CheckName::LsaIdentity,
        CheckName::Compatibility,
        CheckName::BiderFamily,
        CheckName::BiderGrid,
        CheckName::Commuting,
        CheckName::PostlieGrid,
        CheckName::LsaBiderGrid,
        CheckName::Star,
        CheckName::Ast,
        CheckName::CrossCheck,
        CheckName::SolveTheta,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Jacobi => "jacobi",
            CheckName::Antisym => "antisym",
            CheckName::Grading => "grading",
            CheckName::LsaIdentity => "lsa-identity",
            CheckName::Compatibility => "compatibility",
            CheckName::BiderFamily => "bider-family",
            CheckName::BiderGrid => "bider-grid",
            CheckName::Commuting => "commuting",
            CheckName::PostlieGrid => "postlie-grid",
            CheckName::LsaBiderGrid => "lsa-bider-grid",
            CheckName::Star => "star",
            CheckName::Ast => "ast",
            CheckName::CrossCheck => "cross-check",
            CheckName::SolveTheta => "solve-theta",
        }
    }

    /// Largest `d·d` index sum a numeric run of this check evaluates;
    /// `None` for checks that never touch ε.
    pub fn eps_reach(self, window: i64) -> Option<i64> {
        match self {
            CheckName::LsaIdentity | CheckName::LsaBiderGrid => Some(3 * window),
            CheckName::Compatibility => Some(2 * window),
            CheckName::Star | CheckName::Ast | CheckName::CrossCheck => Some(coeff_reach(window)),
            _ => None,
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s.trim())
            .ok_or_else(|| ConfigError::UnknownCheck(s.trim().to_string()))
    }
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<CheckName>, ConfigError> {
    if list.trim() == "all" {
        return Ok(CheckName::ALL.to_vec());
    }
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(ConfigError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("window must be at least 1, got {0}")]
    WindowTooSmall(i64),
    #[error("solve-theta needs a window of at least 2, got {0}")]
    ThetaWindow(i64),
    #[error("unknown check '{0}'")]
    UnknownCheck(String),
    #[error("unknown format '{0}' (expected json or text)")]
    UnknownFormat(String),
    #[error("check {check}")]
    Eps { check: CheckName, source: LsaError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub window: i64,
    pub eps: EpsMode,
    pub format: Format,
    pub checks: Vec<CheckName>,
    /// Run the Lie-algebra checks on the centerless algebra.
    pub centerless: bool,
    pub parallelism: Parallelism,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            window: 5,
            eps: EpsMode::Symbolic,
            format: Format::Json,
            checks: CheckName::ALL.to_vec(),
            centerless: false,
            parallelism: Parallelism::Auto,
        }
    }
}

impl RunConfig {
    pub fn mode(&self) -> AlgebraMode {
        if self.centerless {
            AlgebraMode::Centerless
        } else {
            AlgebraMode::Full
        }
    }

    /// Rejects the configuration before any check runs: window bounds and
    /// ε admissibility for every selected check.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.window < 1 {
            return Err(ConfigError::WindowTooSmall(self.window));
        }
        for &check in &self.checks {
            if check == CheckName::SolveTheta && self.window < 2 {
                return Err(ConfigError::ThetaWindow(self.window));
            }
            if let Some(reach) = check.eps_reach(self.window) {
                self.eps
                    .check_reach(reach)
                    .map_err(|source| ConfigError::Eps { check, source })?;
            }
        }
        Ok(())
    }
}

fn element_check(
    name: &str,
    id: &str,
    window: i64,
    cases: Vec<Vec<Basis>>,
    par: Parallelism,
    residual: impl Fn(&[Basis]) -> Result<Element, LsaError> + Sync + Send,
) -> Result<Report, LsaError> {
    let found = par.try_map(&cases, |c| {
        let r = residual(c)?;
        Ok::<_, LsaError>((!r.is_zero()).then(|| Failure::new(CaseInput::basis(c), id, Residual::Element(r))))
    })?;
    Ok(Report::new(
        name,
        window,
        "symbolic",
        cases.len() as u64,
        found.into_iter().flatten().collect(),
    ))
}

fn pair_cases(window: i64, mode: AlgebraMode) -> Vec<Vec<Basis>> {
    pairs(&window_basis(window, mode))
        .into_iter()
        .map(|(a, b)| vec![a, b])
        .collect()
}

fn triple_cases(window: i64, mode: AlgebraMode) -> Vec<Vec<Basis>> {
    triples(&window_basis(window, mode))
        .into_iter()
        .map(|(a, b, c)| vec![a, b, c])
        .collect()
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on every basis triple.
pub fn check_jacobi(window: i64, mode: AlgebraMode, par: Parallelism) -> Report {
    let br = |a: &Element, b: &Element| bracket_unchecked(a, b, mode);
    element_check("jacobi", "jacobi", window, triple_cases(window, mode), par, |c| {
        let (x, y, z) = (Element::basis(c[0]), Element::basis(c[1]), Element::basis(c[2]));
        let s = &br(&x, &br(&y, &z)) + &br(&y, &br(&z, &x));
        Ok(&s + &br(&z, &br(&x, &y)))
    })
    .expect("bracket is total")
}

/// `[x,y] + [y,x]` on every basis pair (the diagonal gives `2[x,x]`).
pub fn check_antisym(window: i64, mode: AlgebraMode, par: Parallelism) -> Report {
    element_check("antisym", "antisym", window, pair_cases(window, mode), par, |c| {
        Ok(&bracket_basis(c[0], c[1], mode) + &bracket_basis(c[1], c[0], mode))
    })
    .expect("bracket is total")
}

/// `deg [x,y] = deg x + deg y` whenever the bracket is nonzero.
pub fn check_grading(window: i64, mode: AlgebraMode, par: Parallelism) -> Report {
    let cases = pair_cases(window, mode);
    let found = par.map(&cases, |c| {
        let b = bracket_basis(c[0], c[1], mode);
        if b.is_zero() {
            return None;
        }
        let expected = c[0].degree() + c[1].degree();
        match grading_degree(&b) {
            Ok(Grade::Homogeneous(d)) if d == expected => None,
            other => Some(Failure::new(
                CaseInput::basis(c),
                "grading",
                Residual::Text(format!("bracket {b} has degree {other:?}, expected {expected}")),
            )),
        }
    });
    Report::new(
        "grading",
        window,
        "symbolic",
        cases.len() as u64,
        found.into_iter().flatten().collect(),
    )
}

/// Left-symmetric identity of the product on every basis triple.
pub fn check_lsa_identity(window: i64, eps: &EpsMode, par: Parallelism) -> Result<Report, LsaError> {
    eps.check_reach(3 * window)?;
    let lsa = Lsa::new(eps.clone());
    let cases = triple_cases(window, AlgebraMode::Full);
    let mut r = element_check("lsa-identity", "lsa.identity", window, cases, par, |c| {
        lsa.associator_defect(&Element::basis(c[0]), &Element::basis(c[1]), &Element::basis(c[2]))
    })?;
    r.eps_mode = eps.to_string();
    Ok(r)
}

/// `xy - yx = [x, y]` on every basis pair, central terms included.
pub fn check_compatibility(window: i64, eps: &EpsMode, par: Parallelism) -> Result<Report, LsaError> {
    eps.check_reach(2 * window)?;
    let lsa = Lsa::new(eps.clone());
    let cases = pair_cases(window, AlgebraMode::Full);
    let mut r = element_check("compatibility", "lsa.compat", window, cases, par, |c| {
        let (x, y) = (Element::basis(c[0]), Element::basis(c[1]));
        Ok(&lsa.commutator(&x, &y)? - &bracket_unchecked(&x, &y, AlgebraMode::Full))
    })?;
    r.eps_mode = eps.to_string();
    Ok(r)
}

fn run_check(check: CheckName, cfg: &RunConfig) -> Result<Report, ConfigError> {
    let (w, eps, par, mode) = (cfg.window, &cfg.eps, cfg.parallelism, cfg.mode());
    let with_eps = |r: Result<Report, LsaError>| r.map_err(|source| ConfigError::Eps { check, source });
    let mut report = match check {
        CheckName::Jacobi => check_jacobi(w, mode, par),
        CheckName::Antisym => check_antisym(w, mode, par),
        CheckName::Grading => check_grading(w, mode, par),
        CheckName::LsaIdentity => with_eps(check_lsa_identity(w, eps, par))?,
        CheckName::Compatibility => with_eps(check_compatibility(w, eps, par))?,
        CheckName::BiderFamily => check_bider_family(&family_samples(), w, mode, par),
        CheckName::BiderGrid => check_converse(w, par),
        CheckName::Commuting => check_commuting_family(&commuting_samples(), w, par),
        CheckName::PostlieGrid => post_lie_grid(&triviality_grid(), w, par),
        CheckName::LsaBiderGrid => with_eps(lsa_bider_grid(&triviality_grid(), w, eps, par))?,
        CheckName::Star => with_eps(check_star(w, eps, par))?,
        CheckName::Ast => with_eps(check_ast(w, eps, par))?,
        CheckName::CrossCheck => with_eps(check_cross(w, eps, par))?,
        CheckName::SolveTheta => check_theta(w),
    };
    // Every report of one run carries the run's ε, so a numeric run and a
    // specialized symbolic run serialize identically.
    report.eps_mode = eps.to_string();
    report.check_name = check.as_str().to_string();
    Ok(report)
}

/// Validates the configuration, then runs the selected checks in order.
pub fn run_suite(cfg: &RunConfig) -> Result<Vec<Report>, ConfigError> {
    cfg.validate()?;
    cfg.parallelism
        .install(|| cfg.checks.iter().map(|&c| run_check(c, cfg)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn check_names_round_trip() {
        for c in CheckName::ALL {
            assert_eq!(c.as_str().parse::<CheckName>().unwrap(), c);
        }
        assert_eq!(
            parse_checks("jacobi, star").unwrap(),
            vec![CheckName::Jacobi, CheckName::Star]
        );
        assert!(parse_checks("nope").is_err());
        assert_eq!(parse_checks("all").unwrap().len(), 14);
    }

    #[test]
    fn jacobi_counts_full_basis_triples() {
        let cfg = RunConfig {
            window: 4,
            checks: vec![CheckName::Jacobi],
            ..RunConfig::default()
        };
        let r = &run_suite(&cfg).unwrap()[0];
        assert!(r.passed);
        assert_eq!(r.total_cases, 20u64.pow(3));
    }

    #[test]
    fn pole_is_rejected_before_running() {
        let cfg = RunConfig {
            window: 3,
            eps: EpsMode::numeric(rat(-1, 2)).unwrap(),
            checks: vec![CheckName::LsaIdentity],
            ..RunConfig::default()
        };
        assert!(matches!(
            run_suite(&cfg),
            Err(ConfigError::Eps {
                check: CheckName::LsaIdentity,
                ..
            })
        ));
    }
}
