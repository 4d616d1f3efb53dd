//! The compatible graded left-symmetric product on the algebra.
//!
//! ```text
//! d_m d_n             = -n(1+e n)/(1+e(m+n)) d_{m+n} + (m^3 - m + (e - 1/e) m^2)/24 δ_{m+n,0} c
//! d_m h_{n+1/2}       = -(n+1/2) h_{m+n+1/2}
//! h_{m+1/2} h_{n+1/2} = 1/2 (m+1/2) δ_{m+n+1,0} l
//! ```
//!
//! Every other basis product (central factors, `h·d`) is zero. The `h·h`
//! entry carries the factor `(m+1/2)` of the *left* index; that is the
//! choice whose commutator reproduces `[h_r, h_s] = r δ_{r+s,0} l`.

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{bilinear, half_shift, Basis, Element};
use crate::scalar::{int, Rational, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LsaError {
    #[error("epsilon must be nonzero")]
    ZeroEpsilon,
    #[error("pole: 1 + e*({sum}) vanishes at e = {eps} (product d({m})·d({n}))")]
    Pole { m: i64, n: i64, sum: i64, eps: String },
    #[error("e = {eps} is not admissible: 1 + e*({sum}) = 0 and |{sum}| <= {reach} is reachable")]
    Inadmissible { eps: String, sum: i64, reach: i64 },
    #[error("invalid epsilon '{0}': expected 'symbolic' or a rational p/q")]
    Parse(String),
}

/// How `e` is treated: as the formal parameter of ℚ(e), or as a fixed
/// nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum EpsMode {
    #[default]
    Symbolic,
    Numeric(Rational),
}

impl EpsMode {
    pub fn numeric(eps: Rational) -> Result<Self, LsaError> {
        if eps.is_zero() {
            return Err(LsaError::ZeroEpsilon);
        }
        Ok(EpsMode::Numeric(eps))
    }

    /// `e` as a scalar in this mode.
    pub fn eps(&self) -> Scalar {
        match self {
            EpsMode::Symbolic => Scalar::eps(),
            EpsMode::Numeric(r) => Scalar::from_rational(r.clone()),
        }
    }

    /// The index sum `s` with `1 + e s = 0`, if any.
    pub fn pole_sum(&self) -> Option<i64> {
        match self {
            EpsMode::Symbolic => None,
            EpsMode::Numeric(r) => {
                let s = -r.recip();
                s.is_integer().then(|| s.to_integer().to_i64()).flatten()
            }
        }
    }

    /// Fails when the pole sum lies within `[-reach, reach]`.
    pub fn check_reach(&self, reach: i64) -> Result<(), LsaError> {
        match self.pole_sum() {
            Some(sum) if sum.abs() <= reach => Err(LsaError::Inadmissible {
                eps: self.to_string(),
                sum,
                reach,
            }),
            _ => Ok(()),
        }
    }

    /// Maps a symbolic scalar into this mode (identity when symbolic).
    pub fn specialize(&self, s: &Scalar) -> Result<Scalar, ScalarError> {
        match self {
            EpsMode::Symbolic => Ok(s.clone()),
            EpsMode::Numeric(r) => s.eval(r).map(Scalar::from_rational),
        }
    }
}

impl fmt::Display for EpsMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EpsMode::Symbolic => f.write_str("symbolic"),
            EpsMode::Numeric(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for EpsMode {
    type Err = LsaError;
    fn from_str(s: &str) -> Result<Self, LsaError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("symbolic") {
            return Ok(EpsMode::Symbolic);
        }
        let r: Rational = t.parse().map_err(|_| LsaError::Parse(s.to_string()))?;
        EpsMode::numeric(r)
    }
}

/// Product evaluator for one ε mode; holds the mode's constants.
#[derive(Debug, Clone)]
pub struct Lsa {
    mode: EpsMode,
    eps: Scalar,
    /// `e - 1/e`
    shift: Scalar,
}

impl Lsa {
    pub fn new(mode: EpsMode) -> Self {
        let eps = mode.eps();
        let shift = &eps - &eps.inv().expect("e is nonzero in every mode");
        Self { mode, eps, shift }
    }

    pub fn mode(&self) -> &EpsMode {
        &self.mode
    }

    /// `f(m, n) = -n(1+e n)/(1+e(m+n))`.
    pub fn f(&self, m: i64, n: i64) -> Result<Scalar, LsaError> {
        let one = Scalar::one();
        let num = -(&Scalar::from_int(n) * &(&one + &self.eps.scale(&int(n))));
        let den = &one + &self.eps.scale(&int(m + n));
        num.checked_div(&den).map_err(|_| LsaError::Pole {
            m,
            n,
            sum: m + n,
            eps: self.mode.to_string(),
        })
    }

    /// `(m^3 - m + (e - 1/e) m^2)/24`, the `c` coefficient of `d_m d_{-m}`.
    pub fn omega(&self, m: i64) -> Scalar {
        let cubic = Scalar::from_int(m * m * m - m);
        let quad = self.shift.scale(&int(m * m));
        (&cubic + &quad).scale(&Rational::new(1.into(), 24.into()))
    }

    pub fn basis_product(&self, u: Basis, v: Basis) -> Result<Element, LsaError> {
        use Basis::*;
        Ok(match (u, v) {
            (D(m), D(n)) => {
                let mut out = Element::term(D(m + n), self.f(m, n)?);
                if m + n == 0 {
                    out.add_term(C, self.omega(m));
                }
                out
            }
            (D(m), H(n)) => Element::term(H(m + n), Scalar::from_rational(-half_shift(n))),
            (H(m), H(n)) if m + n + 1 == 0 => Element::term(
                L,
                Scalar::from_rational(half_shift(m) / Rational::from_integer(2.into())),
            ),
            _ => Element::zero(),
        })
    }

    /// Bilinear product `x·y`. In numeric mode every `d·d` index sum of the
    /// inputs is scanned for a pole before multiplying.
    pub fn product(&self, x: &Element, y: &Element) -> Result<Element, LsaError> {
        if let Some(pole) = self.mode.pole_sum() {
            for (u, _) in x.iter() {
                for (v, _) in y.iter() {
                    if let (Basis::D(m), Basis::D(n)) = (*u, *v) {
                        if m + n == pole {
                            return Err(LsaError::Pole {
                                m,
                                n,
                                sum: pole,
                                eps: self.mode.to_string(),
                            });
                        }
                    }
                }
            }
        }
        let mut err = None;
        let out = bilinear(x, y, |u, v| match self.basis_product(u, v) {
            Ok(p) => p,
            Err(e) => {
                err.get_or_insert(e);
                Element::zero()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element, LsaError> {
        Ok(&self.product(x, y)? - &self.product(y, x)?)
    }

    /// `((xy)z - x(yz)) - ((yx)z - y(xz))`; zero iff the triple satisfies
    /// the left-symmetric identity.
    pub fn associator_defect(&self, x: &Element, y: &Element, z: &Element) -> Result<Element, LsaError> {
        let xy_z = self.product(&self.product(x, y)?, z)?;
        let x_yz = self.product(x, &self.product(y, z)?)?;
        let yx_z = self.product(&self.product(y, x)?, z)?;
        let y_xz = self.product(y, &self.product(x, z)?)?;
        let mut out = &xy_z - &x_yz;
        out = &out - &yx_z;
        Ok(&out + &y_xz)
    }
}

pub fn lsa_product(x: &Element, y: &Element, eps: &EpsMode) -> Result<Element, LsaError> {
    Lsa::new(eps.clone()).product(x, y)
}

pub fn lsa_commutator(x: &Element, y: &Element, eps: &EpsMode) -> Result<Element, LsaError> {
    Lsa::new(eps.clone()).commutator(x, y)
}

pub fn lsa_associator_defect(x: &Element, y: &Element, z: &Element, eps: &EpsMode) -> Result<Element, LsaError> {
    Lsa::new(eps.clone()).associator_defect(x, y, z)
}
