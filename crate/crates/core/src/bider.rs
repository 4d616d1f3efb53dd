//! Biderivations of the algebra, commuting maps, commutative post-Lie
//! structures and biderivations of the left-symmetric algebra.
//!
//! The classified family is `f(x, y) = λ[x, y] + Υ_Ω(x, y)` with
//! `Υ_Ω(d_m, d_n) = Σ_k (k+1/2) μ_k h_{m+n+k+1/2}` and `Υ_Ω = 0` on every
//! other basis pair.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{
    bilinear, bracket_basis, bracket_unchecked, half_shift, window_basis, AlgebraMode, Basis, Element,
};
use crate::exec::{pairs, triples, Parallelism};
use crate::lsa::{EpsMode, Lsa, LsaError};
use crate::report::{CaseInput, Details, Failure, Report, Residual};
use crate::scalar::{rat, Scalar};

const FULL: AlgebraMode = AlgebraMode::Full;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiderError {
    #[error("tau({0}) = {1} is not central")]
    NonCentralTau(Basis, Element),
}

/// `(λ, Ω)` with Ω finitely supported; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiderParams {
    pub lambda: Scalar,
    omega: BTreeMap<i64, Scalar>,
}

impl BiderParams {
    pub fn new(lambda: Scalar, omega: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, mu) in omega {
            let entry: &mut Scalar = map.entry(k).or_default();
            *entry = &*entry + &mu;
        }
        map.retain(|_, mu: &mut Scalar| !mu.is_zero());
        Self { lambda, omega: map }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn omega(&self) -> &BTreeMap<i64, Scalar> {
        &self.omega
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda.is_zero() && self.omega.is_empty()
    }

    /// e.g. `lambda=1/2 omega={-1:1,1:-1}`.
    pub fn label(&self) -> String {
        let mut s = format!("lambda={} omega={{", self.lambda);
        for (i, (k, mu)) in self.omega.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{k}:{mu}");
        }
        s.push('}');
        s
    }
}

/// A bilinear map given on basis pairs; extended bilinearly to elements.
pub trait BilinearMap: Sync {
    fn apply_basis(&self, u: Basis, v: Basis) -> Element;

    fn apply(&self, x: &Element, y: &Element) -> Element {
        bilinear(x, y, |u, v| self.apply_basis(u, v))
    }
}

impl<F> BilinearMap for F
where
    F: Fn(Basis, Basis) -> Element + Sync,
{
    fn apply_basis(&self, u: Basis, v: Basis) -> Element {
        self(u, v)
    }
}

impl BilinearMap for BiderParams {
    fn apply_basis(&self, u: Basis, v: Basis) -> Element {
        let mut out = bracket_basis(u, v, FULL).scale(&self.lambda);
        out = &out + &upsilon_basis(self, u, v);
        out
    }
}

pub fn upsilon_basis(params: &BiderParams, u: Basis, v: Basis) -> Element {
    match (u, v) {
        (Basis::D(m), Basis::D(n)) => params
            .omega
            .iter()
            .map(|(k, mu)| (Basis::H(m + n + k), mu.scale(&half_shift(*k))))
            .collect(),
        _ => Element::zero(),
    }
}

pub fn upsilon(params: &BiderParams, x: &Element, y: &Element) -> Element {
    bilinear(x, y, |u, v| upsilon_basis(params, u, v))
}

/// `λ[x, y] + Υ_Ω(x, y)`.
pub fn bider_eval(params: &BiderParams, x: &Element, y: &Element) -> Element {
    params.apply(x, y)
}

fn br(x: &Element, y: &Element) -> Element {
    bracket_unchecked(x, y, FULL)
}

fn basis_el(b: Basis) -> Element {
    Element::basis(b)
}

/// Both biderivation axiom residuals at one basis triple:
/// `f([x,y],z) - [f(x,z),y] - [x,f(y,z)]` and
/// `f(x,[y,z]) - [f(x,y),z] - [y,f(x,z)]`.
///
/// In centerless mode the brackets drop `c` and `l`, and so do the values
/// of `f` (the quotient by the center).
pub fn biderivation_residuals(
    cand: &impl BilinearMap,
    x: Basis,
    y: Basis,
    z: Basis,
    mode: AlgebraMode,
) -> [Element; 2] {
    let (xe, ye, ze) = (basis_el(x), basis_el(y), basis_el(z));
    let br = |a: &Element, b: &Element| bracket_unchecked(a, b, mode);
    let f = |a: &Element, b: &Element| match mode {
        AlgebraMode::Full => cand.apply(a, b),
        AlgebraMode::Centerless => cand.apply(a, b).without_center(),
    };
    let fxz = f(&xe, &ze);
    let left = &(&f(&br(&xe, &ye), &ze) - &br(&fxz, &ye)) - &br(&xe, &f(&ye, &ze));
    let right = &(&f(&xe, &br(&ye, &ze)) - &br(&f(&xe, &ye), &ze)) - &br(&ye, &fxz);
    [left, right]
}

fn triple_failures(
    label: Option<&str>,
    t: (Basis, Basis, Basis),
    ids: [&str; 2],
    residuals: [Element; 2],
) -> Vec<Failure> {
    let input = CaseInput::basis(&[t.0, t.1, t.2]);
    let input = match label {
        Some(l) => CaseInput::labeled(l, input),
        None => input,
    };
    ids.into_iter()
        .zip(residuals)
        .filter(|(_, r)| !r.is_zero())
        .map(|(id, r)| Failure::new(input.clone(), id, Residual::Element(r)))
        .collect()
}

/// Checks both biderivation axioms on every basis triple of the window.
/// Failures are data: every failing triple is listed.
pub fn check_biderivation(cand: &impl BilinearMap, window: i64, mode: AlgebraMode, par: Parallelism) -> Report {
    let basis = window_basis(window, mode);
    let cases = triples(&basis);
    let failures = par.install(|| {
        par.map(&cases, |&t| {
            triple_failures(
                None,
                t,
                ["bider.left", "bider.right"],
                biderivation_residuals(cand, t.0, t.1, t.2, mode),
            )
        })
    });
    Report::new(
        "biderivation",
        window,
        "symbolic",
        cases.len() as u64,
        failures.into_iter().flatten().collect(),
    )
}

/// The parameter sets exercised by the `bider-family` check; Ω supports lie
/// in `[-3, 3]`.
pub fn family_samples() -> Vec<BiderParams> {
    vec![
        BiderParams::new(Scalar::one(), []),
        BiderParams::new(Scalar::zero(), [(0, Scalar::one())]),
        BiderParams::new(Scalar::from_int(2), [(1, Scalar::one())]),
        BiderParams::new(
            Scalar::from_ratio(-1, 2),
            [(-3, Scalar::from_int(2)), (3, Scalar::from_int(-1))],
        ),
        BiderParams::new(
            Scalar::from_int(3),
            [
                (-1, Scalar::from_ratio(1, 3)),
                (2, Scalar::from_ratio(-5, 4)),
                (-2, Scalar::one()),
            ],
        ),
    ]
}

/// Runs [`check_biderivation`] for every sample parameter set and checks
/// that `f` annihilates the center on both sides. Per parameter set the
/// case count is `|B|^3` triples plus `4|B|` central pairs, where `B` is
/// the full window basis; in centerless mode only the triples range over
/// the smaller centerless basis.
pub fn check_bider_family(samples: &[BiderParams], window: i64, mode: AlgebraMode, par: Parallelism) -> Report {
    let basis = window_basis(window, mode);
    let full_basis = window_basis(window, FULL);
    let cases = triples(&basis);
    let mut failures = Vec::new();
    for params in samples {
        let label = params.label();
        let found = par.install(|| {
            par.map(&cases, |&t| {
                triple_failures(
                    Some(&label),
                    t,
                    ["bider.left", "bider.right"],
                    biderivation_residuals(params, t.0, t.1, t.2, mode),
                )
            })
        });
        failures.extend(found.into_iter().flatten());
        for &x in &full_basis {
            for alpha in [Basis::C, Basis::L] {
                for (u, v) in [(x, alpha), (alpha, x)] {
                    let r = params.apply_basis(u, v);
                    if !r.is_zero() {
                        failures.push(Failure::new(
                            CaseInput::labeled(label.clone(), CaseInput::basis(&[u, v])),
                            "bider.central",
                            Residual::Element(r),
                        ));
                    }
                }
            }
        }
    }
    let per_set = (cases.len() + 4 * full_basis.len()) as u64;
    Report::new(
        "bider-family",
        window,
        "symbolic",
        per_set * samples.len() as u64,
        failures,
    )
}

/// A linear map given on basis vectors.
pub trait LinearMap: Sync {
    fn apply_basis(&self, u: Basis) -> Element;

    fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (b, c) in x.iter() {
            out.add_scaled(c, &self.apply_basis(*b));
        }
        out
    }
}

impl<F> LinearMap for F
where
    F: Fn(Basis) -> Element + Sync,
{
    fn apply_basis(&self, u: Basis) -> Element {
        self(u)
    }
}

/// `φ(x) = λx + τ(x)` with `τ` valued in the center; `τ` is zero on basis
/// vectors it does not list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommutingMapSpec {
    pub lambda: Scalar,
    tau: BTreeMap<Basis, Element>,
}

impl CommutingMapSpec {
    pub fn new(lambda: Scalar, tau: impl IntoIterator<Item = (Basis, Element)>) -> Result<Self, BiderError> {
        let mut map = BTreeMap::new();
        for (b, t) in tau {
            if t.iter().any(|(k, _)| !k.is_central()) {
                return Err(BiderError::NonCentralTau(b, t));
            }
            if !t.is_zero() {
                map.insert(b, t);
            }
        }
        Ok(Self { lambda, tau: map })
    }
}

impl LinearMap for CommutingMapSpec {
    fn apply_basis(&self, u: Basis) -> Element {
        let mut out = Element::term(u, self.lambda.clone());
        if let Some(t) = self.tau.get(&u) {
            out = &out + t;
        }
        out
    }
}

/// Polarized commuting condition `[φ(u), v] + [φ(v), u] = 0` on every basis
/// pair of the window.
pub fn check_commuting(map: &impl LinearMap, window: i64, par: Parallelism) -> Report {
    let basis = window_basis(window, FULL);
    let cases = pairs(&basis);
    let failures = par.install(|| {
        par.map(&cases, |&(u, v)| {
            let r = &br(&map.apply_basis(u), &basis_el(v)) + &br(&map.apply_basis(v), &basis_el(u));
            (!r.is_zero()).then(|| Failure::new(CaseInput::basis(&[u, v]), "commuting", Residual::Element(r)))
        })
    });
    Report::new(
        "commuting",
        window,
        "symbolic",
        cases.len() as u64,
        failures.into_iter().flatten().collect(),
    )
}

/// Sample maps `λ·id + τ` exercised by the `commuting` check.
pub fn commuting_samples() -> Vec<CommutingMapSpec> {
    let c = Element::basis(Basis::C);
    let l = Element::basis(Basis::L);
    vec![
        CommutingMapSpec::new(Scalar::from_int(5), [(Basis::D(0), c.clone())]).expect("central"),
        CommutingMapSpec::new(
            Scalar::from_ratio(-1, 2),
            [
                (Basis::H(0), l.clone()),
                (Basis::D(1), &c.scale(&Scalar::from_int(2)) - &l),
            ],
        )
        .expect("central"),
        CommutingMapSpec::new(Scalar::zero(), []).expect("central"),
    ]
}

/// `φ(d_m) = m d_m`, zero elsewhere: a table that is not commuting.
pub fn commuting_control(u: Basis) -> Element {
    match u {
        Basis::D(m) => Element::term(Basis::D(m), Scalar::from_int(m)),
        _ => Element::zero(),
    }
}

/// Runs [`check_commuting`] on every sample (failures labelled by sample
/// number) and on [`commuting_control`], which must fail.
pub fn check_commuting_family(samples: &[CommutingMapSpec], window: i64, par: Parallelism) -> Report {
    let mut failures = Vec::new();
    let mut total = 0;
    for (i, spec) in samples.iter().enumerate() {
        let r = check_commuting(spec, window, par);
        total += r.total_cases;
        let label = format!("sample{}", i + 1);
        failures.extend(r.failures.into_iter().map(|f| Failure {
            inputs: CaseInput::labeled(label.clone(), f.inputs),
            ..f
        }));
    }
    let control = check_commuting(&commuting_control, window, par);
    total += control.total_cases;
    if control.passed {
        failures.push(Failure::new(
            CaseInput::Point("control".into()),
            "commuting.control-pass",
            Residual::Text("phi(d_m) = m d_m passed".into()),
        ));
    }
    Report::new("commuting", window, "symbolic", total, failures)
}

/// Post-Lie residuals at a triple with product `x·y = f(x, y)`:
/// `[x,y]·z - x·(y·z) + y·(x·z)` and `x·[y,z] - [x·y, z] - [y, x·z]`.
fn post_lie_residuals(params: &BiderParams, x: Basis, y: Basis, z: Basis) -> [Element; 2] {
    let (xe, ye, ze) = (basis_el(x), basis_el(y), basis_el(z));
    let dot = |a: &Element, b: &Element| params.apply(a, b);
    let left = &(&dot(&br(&xe, &ye), &ze) - &dot(&xe, &dot(&ye, &ze))) + &dot(&ye, &dot(&xe, &ze));
    let right = &(&dot(&xe, &br(&ye, &ze)) - &br(&dot(&xe, &ye), &ze)) - &br(&ye, &dot(&xe, &ze));
    [left, right]
}

fn commutativity_residual(params: &BiderParams, x: Basis, y: Basis) -> Element {
    &params.apply_basis(x, y) - &params.apply_basis(y, x)
}

/// Checks the three commutative post-Lie axioms for `x·y := f(x, y)`.
/// Cases: `|B|^2` commutativity pairs plus `|B|^3` triples.
pub fn check_post_lie(params: &BiderParams, window: i64, par: Parallelism) -> Report {
    let basis = window_basis(window, FULL);
    let pair_cases = pairs(&basis);
    let triple_cases = triples(&basis);
    let mut failures: Vec<Failure> = pair_cases
        .iter()
        .filter_map(|&(x, y)| {
            let r = commutativity_residual(params, x, y);
            (!r.is_zero()).then(|| Failure::new(CaseInput::basis(&[x, y]), "postlie.comm", Residual::Element(r)))
        })
        .collect();
    let found = par.install(|| {
        par.map(&triple_cases, |&t| {
            triple_failures(
                None,
                t,
                ["postlie.left", "postlie.right"],
                post_lie_residuals(params, t.0, t.1, t.2),
            )
        })
    });
    failures.extend(found.into_iter().flatten());
    Report::new(
        "post-lie",
        window,
        "symbolic",
        (pair_cases.len() + triple_cases.len()) as u64,
        failures,
    )
}

/// First violated post-Lie axiom, scanning pairs then triples in order.
pub fn post_lie_first_failure(params: &BiderParams, window: i64) -> Option<Failure> {
    let basis = window_basis(window, FULL);
    for &(x, y) in &pairs(&basis) {
        let r = commutativity_residual(params, x, y);
        if !r.is_zero() {
            return Some(Failure::new(
                CaseInput::basis(&[x, y]),
                "postlie.comm",
                Residual::Element(r),
            ));
        }
    }
    triples(&basis).into_iter().find_map(|t| {
        triple_failures(
            None,
            t,
            ["postlie.left", "postlie.right"],
            post_lie_residuals(params, t.0, t.1, t.2),
        )
        .into_iter()
        .next()
    })
}

/// Both sides of the two LSA-biderivation axioms at a basis triple, with
/// `·` the left-symmetric product:
/// `[(f(x·y, z), f(x,z)·y + x·f(y,z)), (f(x, y·z), f(x,y)·z + y·f(x,z))]`.
pub fn lsa_bider_sides(
    params: &BiderParams,
    lsa: &Lsa,
    x: Basis,
    y: Basis,
    z: Basis,
) -> Result<[(Element, Element); 2], LsaError> {
    let (xe, ye, ze) = (basis_el(x), basis_el(y), basis_el(z));
    let f = |a: &Element, b: &Element| params.apply(a, b);
    let fxz = params.apply_basis(x, z);
    let left_lhs = f(&lsa.product(&xe, &ye)?, &ze);
    let left_rhs = &lsa.product(&fxz, &ye)? + &lsa.product(&xe, &params.apply_basis(y, z))?;
    let right_lhs = f(&xe, &lsa.product(&ye, &ze)?);
    let right_rhs = &lsa.product(&params.apply_basis(x, y), &ze)? + &lsa.product(&ye, &fxz)?;
    Ok([(left_lhs, left_rhs), (right_lhs, right_rhs)])
}

fn lsa_bider_residuals(
    params: &BiderParams,
    lsa: &Lsa,
    x: Basis,
    y: Basis,
    z: Basis,
) -> Result<[Element; 2], LsaError> {
    let [(a, b), (c, d)] = lsa_bider_sides(params, lsa, x, y, z)?;
    Ok([&a - &b, &c - &d])
}

/// Largest `d·d` index sum the LSA-biderivation check touches.
fn lsa_bider_reach(window: i64) -> i64 {
    3 * window
}

/// Checks the LSA-biderivation axioms for `f = λ[·,·] + Υ_Ω` on every basis
/// triple of the window.
pub fn check_lsa_biderivation(
    params: &BiderParams,
    window: i64,
    eps: &EpsMode,
    par: Parallelism,
) -> Result<Report, LsaError> {
    eps.check_reach(lsa_bider_reach(window))?;
    let lsa = Lsa::new(eps.clone());
    let basis = window_basis(window, FULL);
    let cases = triples(&basis);
    let found = par.install(|| {
        par.try_map(&cases, |&t| {
            Ok::<_, LsaError>(triple_failures(
                None,
                t,
                ["lsabider.left", "lsabider.right"],
                lsa_bider_residuals(params, &lsa, t.0, t.1, t.2)?,
            ))
        })
    })?;
    Ok(Report::new(
        "lsa-biderivation",
        window,
        eps.to_string(),
        cases.len() as u64,
        found.into_iter().flatten().collect(),
    ))
}

pub fn lsa_bider_first_failure(params: &BiderParams, window: i64, lsa: &Lsa) -> Result<Option<Failure>, LsaError> {
    for t in triples(&window_basis(window, FULL)) {
        let found = triple_failures(
            None,
            t,
            ["lsabider.left", "lsabider.right"],
            lsa_bider_residuals(params, lsa, t.0, t.1, t.2)?,
        );
        if let Some(f) = found.into_iter().next() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// `λ ∈ {0, ±1, ±2, 1/2}` × Ω with support in `{-1, 0, 1}` and entries in
/// `{0, ±1}`: 6 × 27 points, the trivial point first.
pub fn triviality_grid() -> Vec<BiderParams> {
    let lambdas = [rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1), rat(-2, 1), rat(1, 2)];
    let mus = [0i64, 1, -1];
    let mut out = Vec::with_capacity(lambdas.len() * 27);
    for l in &lambdas {
        for a in mus {
            for b in mus {
                for c in mus {
                    out.push(BiderParams::new(
                        Scalar::from_rational(l.clone()),
                        [
                            (-1, Scalar::from_int(a)),
                            (0, Scalar::from_int(b)),
                            (1, Scalar::from_int(c)),
                        ],
                    ));
                }
            }
        }
    }
    out
}

fn grid_report(name: &str, window: i64, eps: &EpsMode, grid: &[BiderParams], outcomes: Vec<Option<Failure>>) -> Report {
    let mut failures = Vec::new();
    let mut passing = Vec::new();
    for (params, outcome) in grid.iter().zip(outcomes) {
        let point = CaseInput::Point(params.label());
        match (params.is_trivial(), outcome) {
            (true, None) => passing.push(params.label()),
            (false, None) => {
                passing.push(params.label());
                failures.push(Failure::new(
                    point,
                    "grid.nontrivial-pass",
                    Residual::Text("every axiom holds on the window".into()),
                ));
            }
            (true, Some(f)) => failures.push(Failure::new(
                point,
                "grid.trivial-fail",
                Residual::Text(format!(
                    "{} at {}: {}",
                    f.equation_id,
                    f.inputs.render(),
                    f.residual.render()
                )),
            )),
            (false, Some(_)) => {}
        }
    }
    passing.sort();
    Report::new(name, window, eps.to_string(), grid.len() as u64, failures).with_details(Details::Grid {
        passing_points: passing,
    })
}

/// Post-Lie triviality over a parameter grid; passes iff the trivial point
/// is the only one satisfying every axiom.
pub fn post_lie_grid(grid: &[BiderParams], window: i64, par: Parallelism) -> Report {
    let outcomes = par.install(|| par.map(grid, |p| post_lie_first_failure(p, window)));
    grid_report("postlie-grid", window, &EpsMode::Symbolic, grid, outcomes)
}

/// LSA-biderivation triviality over a parameter grid.
pub fn lsa_bider_grid(grid: &[BiderParams], window: i64, eps: &EpsMode, par: Parallelism) -> Result<Report, LsaError> {
    eps.check_reach(lsa_bider_reach(window))?;
    let lsa = Lsa::new(eps.clone());
    let outcomes = par.install(|| par.try_map(grid, |p| lsa_bider_first_failure(p, window, &lsa)))?;
    Ok(grid_report("lsa-bider-grid", window, eps, grid, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Basis::*;

    fn b(x: Basis) -> Element {
        Element::basis(x)
    }

    #[test]
    fn upsilon_spot_values() {
        let p = BiderParams::new(Scalar::zero(), [(0, Scalar::one())]);
        assert_eq!(
            upsilon(&p, &b(D(1)), &b(D(2))),
            Element::term(H(3), Scalar::from_ratio(1, 2))
        );
        assert!(upsilon(&p, &b(D(3)), &b(H(2))).is_zero());
        let q = BiderParams::new(Scalar::zero(), [(-1, Scalar::from_int(2))]);
        assert_eq!(
            upsilon(&q, &b(D(0)), &b(D(0))),
            Element::term(H(-1), Scalar::from_int(-1))
        );
    }

    #[test]
    fn bider_eval_spot_values() {
        let p = BiderParams::new(Scalar::from_int(3), []);
        assert_eq!(
            bider_eval(&p, &b(D(2)), &b(D(1))),
            Element::term(D(3), Scalar::from_int(3))
        );
        let q = BiderParams::new(Scalar::one(), [(0, Scalar::one())]);
        assert_eq!(
            bider_eval(&q, &b(D(1)), &b(D(-1))),
            Element::from_terms([(D(0), Scalar::from_int(2)), (H(0), Scalar::from_ratio(1, 2))])
        );
        for x in [D(2), H(-1), C, L] {
            assert!(bider_eval(&q, &b(C), &b(x)).is_zero());
            assert!(bider_eval(&q, &b(x), &b(L)).is_zero());
        }
    }

    #[test]
    fn family_member_is_a_biderivation() {
        let p = BiderParams::new(Scalar::from_int(2), [(1, Scalar::one())]);
        assert!(check_biderivation(&p, 2, AlgebraMode::Centerless, Parallelism::Auto).passed);
        let inner = BiderParams::new(Scalar::from_int(2), []);
        assert!(check_biderivation(&inner, 2, FULL, Parallelism::Auto).passed);
        let zero = |_: Basis, _: Basis| Element::zero();
        assert!(check_biderivation(&zero, 2, FULL, Parallelism::Auto).passed);
    }

    #[test]
    fn upsilon_meets_the_center_in_the_full_algebra() {
        // [Υ(d_-2, d_-2), h_{5/2}] = 3/2 [h_{-5/2}, h_{5/2}] = -15/4 l has no
        // counterpart on the other side of the second axiom.
        let p = BiderParams::new(Scalar::from_int(2), [(1, Scalar::one())]);
        let [_, right] = biderivation_residuals(&p, D(-2), D(-2), H(2), FULL);
        assert_eq!(right, Element::term(L, Scalar::from_ratio(15, 4)));
        let [_, quotient] = biderivation_residuals(&p, D(-2), D(-2), H(2), AlgebraMode::Centerless);
        assert!(quotient.is_zero());
    }

    #[test]
    fn off_family_table_fails() {
        let cand = |u: Basis, v: Basis| match (u, v) {
            (D(m), D(n)) => b(D(m + n)),
            _ => Element::zero(),
        };
        let [l, r] = biderivation_residuals(&cand, D(1), D(1), D(2), FULL);
        assert!(!(l.is_zero() && r.is_zero()));
        assert!(!check_biderivation(&cand, 2, FULL, Parallelism::Auto).passed);
    }

    #[test]
    fn commuting_maps() {
        let spec = CommutingMapSpec::new(Scalar::from_int(5), [(D(0), b(C))]).unwrap();
        assert!(check_commuting(&spec, 3, Parallelism::Auto).passed);
        assert!(check_commuting(&CommutingMapSpec::default(), 2, Parallelism::Auto).passed);
        let raw = |u: Basis| match u {
            D(m) => Element::term(D(m), Scalar::from_int(m)),
            _ => Element::zero(),
        };
        let report = check_commuting(&raw, 2, Parallelism::Auto);
        assert!(!report.passed);
        let witness = report
            .failures
            .iter()
            .find(|f| f.inputs == CaseInput::basis(&[D(1), D(2)]))
            .expect("d_1, d_2 witness");
        assert_eq!(witness.residual, Residual::Element(b(D(3))));
        assert!(CommutingMapSpec::new(Scalar::one(), [(D(1), b(D(1)))]).is_err());
    }

    #[test]
    fn post_lie_examples() {
        assert!(check_post_lie(&BiderParams::zero(), 2, Parallelism::Auto).passed);
        let lam = BiderParams::new(Scalar::one(), []);
        let r = check_post_lie(&lam, 2, Parallelism::Auto);
        assert!(r
            .failures
            .iter()
            .any(|f| f.inputs == CaseInput::basis(&[D(1), D(2)]) && f.equation_id == "postlie.comm"));
        // d_3·d_3 = 1/2 h_{13/2} while the nested products vanish.
        let mu = BiderParams::new(Scalar::zero(), [(0, Scalar::one())]);
        let [left, _] = post_lie_residuals(&mu, D(2), D(1), D(3));
        assert_eq!(left, Element::term(H(6), Scalar::from_ratio(1, 2)));
    }

    #[test]
    fn grid_shape() {
        let g = triviality_grid();
        assert_eq!(g.len(), 162);
        assert!(g[0].is_trivial());
        assert_eq!(g.iter().filter(|p| p.is_trivial()).count(), 1);
    }

    #[test]
    fn params_drop_zero_entries() {
        let p = BiderParams::new(Scalar::one(), [(0, Scalar::zero()), (2, Scalar::from_int(3))]);
        assert_eq!(p.omega().len(), 1);
        assert_eq!(p.label(), "lambda=1 omega={2:3}");
    }
}
