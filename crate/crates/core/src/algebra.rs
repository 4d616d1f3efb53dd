//! Basis, sparse elements and the Lie bracket of the mirror
//! Heisenberg-Virasoro algebra.
//!
//! `H(n)` stands for `h_{n+1/2}`, so every index is an integer and
//! `[d_m, h_{n+1/2}]` lands on `H(m + n)`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{rat, Rational, Scalar};

/// Basis vector. The derived order (D by index, H by index, c, l) is the
/// display and serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Basis {
    D(i64),
    H(i64),
    C,
    L,
}

impl Basis {
    pub fn is_central(self) -> bool {
        matches!(self, Basis::C | Basis::L)
    }

    /// ℤ-degree: `d_n, h_{n+1/2}` sit in degree n, `c` in 0, `l` in −1.
    pub fn degree(self) -> i64 {
        match self {
            Basis::D(n) | Basis::H(n) => n,
            Basis::C => 0,
            Basis::L => -1,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::D(n) => write!(f, "d({n})"),
            Basis::H(n) => write!(f, "h({}/2)", 2 * n + 1),
            Basis::C => f.write_str("c"),
            Basis::L => f.write_str("l"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum AlgebraMode {
    #[default]
    Full,
    Centerless,
}

/// Every basis vector with indices in `[-window, window]`; the central pair
/// is included only in `Full` mode.
pub fn window_basis(window: i64, mode: AlgebraMode) -> Vec<Basis> {
    let mut out: Vec<Basis> = (-window..=window).map(Basis::D).collect();
    out.extend((-window..=window).map(Basis::H));
    if mode == AlgebraMode::Full {
        out.extend([Basis::C, Basis::L]);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("central term {0} is not allowed in centerless mode")]
    CentralInCenterless(Basis),
    #[error("grading degree of the zero element is undefined")]
    ZeroElement,
}

/// Finite linear combination of basis vectors. No stored coefficient is
/// zero; the empty map is the zero element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Basis, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: Basis) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: Basis, coeff: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(b, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Basis, Scalar)>) -> Self {
        let mut e = Self::zero();
        for (b, c) in terms {
            e.add_term(b, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Basis, Scalar> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: Basis) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, b: Basis, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `coeff * other` in place.
    pub fn add_scaled(&mut self, coeff: &Scalar, other: &Element) {
        if coeff.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(*b, coeff * c);
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(coeff, self);
        out
    }

    pub fn has_central(&self) -> Option<Basis> {
        self.terms.keys().copied().find(|b| b.is_central())
    }

    /// Drops the `c` and `l` components.
    pub fn without_center(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| !b.is_central())
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping the ones that become zero.
    pub fn try_map_coeffs<E>(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar, E>) -> Result<Element, E> {
        let mut out = Element::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, f(c)?);
        }
        Ok(out)
    }
}

impl FromIterator<(Basis, Scalar)> for Element {
    fn from_iter<I: IntoIterator<Item = (Basis, Scalar)>>(iter: I) -> Self {
        Element::from_terms(iter)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, -c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl fmt::Display for Element {
    /// Renders in the element expression grammar, e.g.
    /// `d(2) + 3*h(1/2) - c` or `((1+e)/(1+3*e))*d(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let (negative, body) = match c.as_rational() {
                Some(r) => {
                    let negative = r < Rational::from_integer(0.into());
                    let mag = if negative { -r } else { r };
                    let body = if mag == Rational::from_integer(1.into()) {
                        b.to_string()
                    } else {
                        format!("{mag}*{b}")
                    };
                    (negative, body)
                }
                None => (false, format!("({c})*{b}")),
            };
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// `n + 1/2`.
pub(crate) fn half_shift(n: i64) -> Rational {
    rat(2 * n + 1, 2)
}

/// Bracket of two basis vectors. Both arguments are assumed valid for `mode`.
pub fn bracket_basis(u: Basis, v: Basis, mode: AlgebraMode) -> Element {
    use Basis::*;
    match (u, v) {
        (D(m), D(n)) => {
            let mut out = Element::term(D(m + n), Scalar::from_int(m - n));
            if mode == AlgebraMode::Full && m + n == 0 {
                out.add_term(C, Scalar::from_ratio(m * m * m - m, 12));
            }
            out
        }
        (D(m), H(n)) => Element::term(H(m + n), Scalar::from_rational(-half_shift(n))),
        (H(m), D(n)) => Element::term(H(m + n), Scalar::from_rational(half_shift(m))),
        (H(m), H(n)) => {
            if mode == AlgebraMode::Full && m + n + 1 == 0 {
                Element::term(L, Scalar::from_rational(half_shift(m)))
            } else {
                Element::zero()
            }
        }
        _ => Element::zero(),
    }
}

/// Bilinear extension of `f` from basis pairs to elements.
pub fn bilinear(x: &Element, y: &Element, mut f: impl FnMut(Basis, Basis) -> Element) -> Element {
    let mut out = Element::zero();
    for (u, a) in x.iter() {
        for (v, b) in y.iter() {
            let prod = f(*u, *v);
            if !prod.is_zero() {
                out.add_scaled(&(a * b), &prod);
            }
        }
    }
    out
}

/// Lie bracket `[x, y]`. Central inputs are rejected in centerless mode.
pub fn bracket(x: &Element, y: &Element, mode: AlgebraMode) -> Result<Element, AlgebraError> {
    if mode == AlgebraMode::Centerless {
        if let Some(b) = x.has_central().or_else(|| y.has_central()) {
            return Err(AlgebraError::CentralInCenterless(b));
        }
    }
    Ok(bracket_unchecked(x, y, mode))
}

pub(crate) fn bracket_unchecked(x: &Element, y: &Element, mode: AlgebraMode) -> Element {
    bilinear(x, y, |u, v| bracket_basis(u, v, mode))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Homogeneous(i64),
    Mixed,
}

pub fn grading_degree(x: &Element) -> Result<Grade, AlgebraError> {
    let mut degrees = x.iter().map(|(b, _)| b.degree());
    let first = degrees.next().ok_or(AlgebraError::ZeroElement)?;
    if degrees.all(|d| d == first) {
        Ok(Grade::Homogeneous(first))
    } else {
        Ok(Grade::Mixed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Basis::*;

    fn b(x: Basis) -> Element {
        Element::basis(x)
    }

    fn full(x: Basis, y: Basis) -> Element {
        bracket(&b(x), &b(y), AlgebraMode::Full).unwrap()
    }

    #[test]
    fn table_spot_values() {
        assert_eq!(full(D(2), D(1)), b(D(3)));
        assert_eq!(full(D(1), D(-1)), Element::term(D(0), Scalar::from_int(2)));
        assert_eq!(
            full(D(2), D(-2)),
            Element::from_terms([(D(0), Scalar::from_int(4)), (C, Scalar::from_ratio(1, 2))])
        );
        assert_eq!(full(H(0), H(-1)), Element::term(L, Scalar::from_ratio(1, 2)));
        assert!(full(C, D(5)).is_zero());
        assert!(full(D(5), L).is_zero());
    }

    #[test]
    fn centerless_mode() {
        let out = bracket(&b(D(2)), &b(D(-2)), AlgebraMode::Centerless).unwrap();
        assert_eq!(out, Element::term(D(0), Scalar::from_int(4)));
        assert!(bracket(&b(H(0)), &b(H(-1)), AlgebraMode::Centerless).unwrap().is_zero());
        assert_eq!(
            bracket(&b(C), &b(D(1)), AlgebraMode::Centerless),
            Err(AlgebraError::CentralInCenterless(C))
        );
    }

    #[test]
    fn grading() {
        let x = &b(D(3)) + &Element::term(H(3), Scalar::from_int(7));
        assert_eq!(grading_degree(&x), Ok(Grade::Homogeneous(3)));
        assert_eq!(grading_degree(&b(C)), Ok(Grade::Homogeneous(0)));
        assert_eq!(grading_degree(&b(L)), Ok(Grade::Homogeneous(-1)));
        assert_eq!(grading_degree(&(&b(D(1)) + &b(D(2)))), Ok(Grade::Mixed));
        assert_eq!(grading_degree(&Element::zero()), Err(AlgebraError::ZeroElement));
    }

    #[test]
    fn element_ops() {
        let x = b(D(1));
        assert!((&x - &x).is_zero());
        assert_eq!(&x + &x, Element::term(D(1), Scalar::from_int(2)));
        let s = b(H(0)).scale(&Scalar::eps());
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(H(0)), Scalar::eps());
        assert!(x.scale(&Scalar::zero()).is_zero());
    }

    #[test]
    fn display_order_and_signs() {
        let x = Element::from_terms([
            (C, Scalar::from_int(-1)),
            (H(0), Scalar::from_int(3)),
            (D(2), Scalar::one()),
        ]);
        assert_eq!(x.to_string(), "d(2) + 3*h(1/2) - c");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(
            Element::term(H(-2), Scalar::from_ratio(-3, 4)).to_string(),
            "-3/4*h(-3/2)"
        );
    }
}
