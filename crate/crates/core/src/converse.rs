//! Windowed converse of the biderivation classification.
//!
//! Every biderivation of the centerless algebra splits into homogeneous
//! pieces `f(𝔇_m, 𝔇_n) ⊆ 𝔇_{m+n+s}`. For one shift `s` the unknowns are the
//! `d` and `h` coefficients of `f(u, v)` for every basis pair in `[-N, N]`,
//! the equations are both axioms on every triple whose brackets stay in the
//! window, and the solution space is computed exactly. Unknowns near the
//! window edge are under-constrained, so the solutions are compared with
//! the family only after projecting onto an interior sub-window.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{bracket_basis, window_basis, AlgebraMode, Basis, Element};
use crate::bider::{upsilon_basis, BiderParams};
use crate::exec::{triples, Parallelism};
use crate::linsolve::{rank_of, Echelon};
use crate::report::{CaseInput, Details, Failure, Report, Residual, ShiftOutcome};
use crate::scalar::{Rational, Scalar};

const MODE: AlgebraMode = AlgebraMode::Centerless;

type LinForm = BTreeMap<usize, Rational>;
/// An element whose coefficients are linear forms in the unknowns.
type LinElem = BTreeMap<Basis, LinForm>;

struct Layout {
    basis: Vec<Basis>,
    index: BTreeMap<Basis, usize>,
    shift: i64,
}

impl Layout {
    fn new(window: i64, shift: i64) -> Self {
        let basis = window_basis(window, MODE);
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        Self { basis, index, shift }
    }

    fn unknowns(&self) -> usize {
        2 * self.basis.len() * self.basis.len()
    }

    fn var(&self, u: Basis, v: Basis, comp: usize) -> Option<usize> {
        let (i, j) = (self.index.get(&u)?, self.index.get(&v)?);
        Some(2 * (i * self.basis.len() + j) + comp)
    }

    fn targets(&self, u: Basis, v: Basis) -> [Basis; 2] {
        let deg = u.degree() + v.degree() + self.shift;
        [Basis::D(deg), Basis::H(deg)]
    }

    /// `f(u, v)` as a symbolic element, or `None` outside the window.
    fn f(&self, u: Basis, v: Basis) -> Option<LinElem> {
        let mut out = LinElem::new();
        for (comp, t) in self.targets(u, v).into_iter().enumerate() {
            out.insert(
                t,
                LinForm::from([(self.var(u, v, comp)?, Rational::from_integer(1.into()))]),
            );
        }
        Some(out)
    }

    /// `f(x, v)` for a concrete element `x`.
    fn f_left(&self, x: &Element, v: Basis) -> Option<LinElem> {
        let mut out = LinElem::new();
        for (u, c) in x.iter() {
            add_scaled(&mut out, &constant(c), &self.f(*u, v)?);
        }
        Some(out)
    }

    fn f_right(&self, u: Basis, y: &Element) -> Option<LinElem> {
        let mut out = LinElem::new();
        for (v, c) in y.iter() {
            add_scaled(&mut out, &constant(c), &self.f(u, *v)?);
        }
        Some(out)
    }
}

fn constant(s: &Scalar) -> Rational {
    s.as_rational().expect("centerless brackets have rational coefficients")
}

fn add_scaled(acc: &mut LinElem, c: &Rational, other: &LinElem) {
    for (b, form) in other {
        let slot = acc.entry(*b).or_default();
        for (var, v) in form {
            let e = slot.entry(*var).or_insert_with(Rational::zero);
            *e += c * v;
            if e.is_zero() {
                slot.remove(var);
            }
        }
        if slot.is_empty() {
            acc.remove(b);
        }
    }
}

/// `[a, y]` for symbolic `a`, or `[y, a]` when `swap` is set.
fn bracket_sym(a: &LinElem, y: Basis, swap: bool) -> LinElem {
    let mut out = LinElem::new();
    for (b, form) in a {
        let e = if swap {
            bracket_basis(y, *b, MODE)
        } else {
            bracket_basis(*b, y, MODE)
        };
        for (t, c) in e.iter() {
            add_scaled(&mut out, &constant(c), &LinElem::from([(*t, form.clone())]));
        }
    }
    out
}

fn neg(a: &LinElem) -> LinElem {
    let mut out = LinElem::new();
    add_scaled(&mut out, &Rational::from_integer((-1).into()), a);
    out
}

fn combine(parts: &[LinElem]) -> LinElem {
    let mut out = LinElem::new();
    let one = Rational::from_integer(1.into());
    for p in parts {
        add_scaled(&mut out, &one, p);
    }
    out
}

/// Residual forms of both axioms at one triple; an axiom is skipped when
/// one of its references leaves the window.
fn axiom_forms(l: &Layout, x: Basis, y: Basis, z: Basis) -> Vec<LinElem> {
    let mut out = Vec::new();
    let fxz = l.f(x, z).expect("window pair");
    // f([x,y],z) - [f(x,z),y] - [x,f(y,z)]
    if let Some(first) = l.f_left(&bracket_basis(x, y, MODE), z) {
        let fyz = l.f(y, z).expect("window pair");
        out.push(combine(&[
            first,
            neg(&bracket_sym(&fxz, y, false)),
            neg(&bracket_sym(&fyz, x, true)),
        ]));
    }
    // f(x,[y,z]) - [f(x,y),z] - [y,f(x,z)]
    if let Some(first) = l.f_right(x, &bracket_basis(y, z, MODE)) {
        let fxy = l.f(x, y).expect("window pair");
        out.push(combine(&[
            first,
            neg(&bracket_sym(&fxy, z, false)),
            neg(&bracket_sym(&fxz, y, true)),
        ]));
    }
    out
}

/// The family members of shift `s`, written in the unknown layout.
fn family_vectors(l: &Layout) -> Vec<Vec<Rational>> {
    let mut maps: Vec<Box<dyn Fn(Basis, Basis) -> Element>> = Vec::new();
    if l.shift == 0 {
        maps.push(Box::new(|u, v| bracket_basis(u, v, MODE)));
    }
    let mu = BiderParams::new(Scalar::zero(), [(l.shift, Scalar::one())]);
    maps.push(Box::new(move |u, v| upsilon_basis(&mu, u, v)));
    maps.iter()
        .map(|map| {
            let mut vec = vec![Rational::zero(); l.unknowns()];
            for &u in &l.basis {
                for &v in &l.basis {
                    let e = map(u, v);
                    for (comp, t) in l.targets(u, v).into_iter().enumerate() {
                        vec[l.var(u, v, comp).expect("window pair")] = constant(&e.coeff(t));
                    }
                }
            }
            vec
        })
        .collect()
}

fn project(l: &Layout, interior: i64, v: &[Rational]) -> Vec<Rational> {
    let inner: Vec<Basis> = l
        .basis
        .iter()
        .copied()
        .filter(|b| b.degree().abs() <= interior)
        .collect();
    let mut out = Vec::with_capacity(2 * inner.len() * inner.len());
    for &a in &inner {
        for &b in &inner {
            for comp in 0..2 {
                out.push(v[l.var(a, b, comp).expect("window pair")].clone());
            }
        }
    }
    out
}

/// Solves the axiom system for shift `s` on `[-N, N]` and compares the
/// solutions on `[-interior, interior]` with the family.
pub fn solve_shift(window: i64, interior: i64, shift: i64) -> ShiftOutcome {
    let l = Layout::new(window, shift);
    let mut e = Echelon::new(l.unknowns());
    for (x, y, z) in triples(&l.basis) {
        for form in axiom_forms(&l, x, y, z) {
            for row in form.into_values() {
                e.push(row, Rational::zero());
            }
        }
    }
    let null = e.nullspace();
    let family = family_vectors(&l);

    let mut with_family = null.clone();
    with_family.extend(family.iter().cloned());
    let family_solves = rank_of(&with_family) == null.len();

    let inner_null: Vec<Vec<Rational>> = null.iter().map(|v| project(&l, interior, v)).collect();
    let inner_family: Vec<Vec<Rational>> = family.iter().map(|v| project(&l, interior, v)).collect();
    let interior_dim = rank_of(&inner_null);
    let family_dim = rank_of(&inner_family);
    let mut both = inner_null;
    both.extend(inner_family);
    let joint = rank_of(&both);

    ShiftOutcome {
        shift,
        unknowns: l.unknowns(),
        equations: e.equations(),
        nullity: null.len(),
        interior_dim,
        family_dim,
        matches_family: family_solves && interior_dim == family_dim && joint == family_dim,
    }
}

/// Interior sub-window used for a window of size `N`.
pub fn default_interior(window: i64) -> i64 {
    (window / 2).max(1)
}

/// Shifts examined for a window of size `N`.
pub fn default_shifts(window: i64) -> Vec<i64> {
    let s = default_interior(window);
    (-s..=s).collect()
}

/// Runs [`solve_shift`] for every shift; passes iff each solution space
/// matches the family on the interior. `total_cases` counts equations.
pub fn check_converse(window: i64, par: Parallelism) -> Report {
    let interior = default_interior(window);
    let shifts = default_shifts(window);
    let outcomes = par.install(|| par.map(&shifts, |&s| solve_shift(window, interior, s)));
    let failures = outcomes
        .iter()
        .filter(|o| !o.matches_family)
        .map(|o| {
            Failure::new(
                CaseInput::Point(format!("shift={}", o.shift)),
                "converse.shift",
                Residual::Text(format!(
                    "interior solution space has dimension {} (nullity {}), family spans {}",
                    o.interior_dim, o.nullity, o.family_dim
                )),
            )
        })
        .collect();
    let total = outcomes.iter().map(|o| o.equations as u64).sum();
    Report::new("bider-grid", window, "symbolic", total, failures).with_details(Details::Converse {
        interior,
        shifts: outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_shift_recovers_lambda_and_mu0() {
        let o = solve_shift(4, 2, 0);
        assert_eq!(o.family_dim, 2);
        assert!(o.matches_family, "{o:?}");
    }

    #[test]
    fn nonzero_shift_recovers_single_mu() {
        let o = solve_shift(4, 2, 1);
        assert_eq!(o.family_dim, 1);
        assert!(o.matches_family, "{o:?}");
    }
}
