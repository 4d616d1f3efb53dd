//! Exact coefficient field: rationals, polynomials in `e` over them, and
//! canonical rational functions in ℚ(e).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num/den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("epsilon must be nonzero")]
    ZeroEpsilon,
    #[error("denominator {den} vanishes at e = {eps}")]
    Pole { den: String, eps: String },
}

/// Univariate polynomial in `e` with rational coefficients, lowest degree
/// first. The coefficient list never ends in a zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyEps {
    coeffs: Vec<Rational>,
}

impl PolyEps {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `e`.
    pub fn eps() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ScalarError> {
        let d_deg = divisor.degree().ok_or(ScalarError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d_deg].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            let shift = top - d_deg;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * dc;
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lc) => {
                let inv = lc.recip();
                a.scale(&inv)
            }
            None => a,
        }
    }

    fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match deg {
                0 => c.to_string(),
                _ => {
                    let var = if deg == 1 { "e".to_string() } else { format!("e^{deg}") };
                    if c.is_one() {
                        var
                    } else if (-c).is_one() {
                        format!("-{var}")
                    } else {
                        format!("{c}*{var}")
                    }
                }
            };
            if !out.is_empty() && !body.starts_with('-') {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl Add for &PolyEps {
    type Output = PolyEps;
    fn add(self, rhs: &PolyEps) -> PolyEps {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        PolyEps::from_coeffs(coeffs)
    }
}

impl Neg for &PolyEps {
    type Output = PolyEps;
    fn neg(self) -> PolyEps {
        PolyEps {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &PolyEps {
    type Output = PolyEps;
    fn sub(self, rhs: &PolyEps) -> PolyEps {
        self + &(-rhs)
    }
}

impl Mul for &PolyEps {
    type Output = PolyEps;
    fn mul(self, rhs: &PolyEps) -> PolyEps {
        if self.is_zero() || rhs.is_zero() {
            return PolyEps::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyEps::from_coeffs(coeffs)
    }
}

/// Element of ℚ(e) in canonical form: `num/den` coprime over ℚ[e], `den`
/// an integer polynomial with content 1 and positive leading coefficient.
/// Canonical forms are unique, so derived equality is field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: PolyEps,
    den: PolyEps,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            num: PolyEps::zero(),
            den: PolyEps::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            num: PolyEps::constant(r),
            den: PolyEps::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    /// The formal parameter `e`.
    pub fn eps() -> Self {
        Self {
            num: PolyEps::eps(),
            den: PolyEps::one(),
        }
    }

    pub fn from_poly(p: PolyEps) -> Self {
        Self {
            num: p,
            den: PolyEps::one(),
        }
    }

    /// Builds `num/den` and brings it into canonical form.
    pub fn from_parts(num: PolyEps, den: PolyEps) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn numer(&self) -> &PolyEps {
        &self.num
    }

    pub fn denom(&self) -> &PolyEps {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value when the scalar does not depend on `e`.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.den.is_one() || !self.num.is_constant() {
            return None;
        }
        Some(self.num.coeffs.first().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    fn canonical(num: PolyEps, den: PolyEps) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeffs[0].recip();
            return Self {
                num: num.scale(&inv),
                den: PolyEps::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            let (qn, _) = num.div_rem(&g).expect("gcd is nonzero");
            let (qd, _) = den.div_rem(&g).expect("gcd is nonzero");
            (qn, qd)
        } else {
            (num, den)
        };
        if den.is_constant() {
            let inv = den.coeffs[0].recip();
            return Self {
                num: num.scale(&inv),
                den: PolyEps::one(),
            };
        }
        // Clear denominators of `den`, divide out its integer content and fix
        // the sign of its leading coefficient.
        let lcm = den.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let content = den
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &lcm / c.denom())));
        let mut factor = Rational::new(lcm, content);
        if den.leading().is_some_and(|lc| lc.is_negative()) {
            factor = -factor;
        }
        Self {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if rhs.is_constant() {
            let inv = rhs.as_rational().expect("constant").recip();
            return Ok(Self {
                num: self.num.scale(&inv),
                den: self.den.clone(),
            });
        }
        Scalar::from_parts(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().checked_div(self)
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact value at `e = eps`.
    pub fn eval(&self, eps: &Rational) -> Result<Rational, ScalarError> {
        if eps.is_zero() {
            return Err(ScalarError::ZeroEpsilon);
        }
        let d = self.den.eval(eps);
        if d.is_zero() {
            return Err(ScalarError::Pole {
                den: self.den.render(),
                eps: eps.to_string(),
            });
        }
        Ok(self.num.eval(eps) / d)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::canonical(&self.num + &rhs.num, self.den.clone());
        }
        Scalar::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if rhs.is_constant() {
            return self.scale(&rhs.as_rational().expect("constant"));
        }
        if self.is_constant() {
            return rhs.scale(&self.as_rational().expect("constant"));
        }
        Scalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for Scalar {
    /// `p(e)` when the denominator is 1, otherwise `p(e)/q(e)` with
    /// parenthesized multi-term or scaled parts, e.g. `(1+e)/(1+3*e)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&self.num.render());
        }
        let num = self.num.render();
        let simple_num = self.num.term_count() == 1 && self.num.coeffs.iter().all(|c| c.is_integer());
        let den = self.den.render();
        let simple_den = self.den.term_count() == 1 && self.den.leading().is_some_and(One::is_one);
        match (simple_num, simple_den) {
            (true, true) => write!(f, "{num}/{den}"),
            (true, false) => write!(f, "{num}/({den})"),
            (false, true) => write!(f, "({num})/{den}"),
            (false, false) => write!(f, "({num})/({den})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c0: i64, c1: i64) -> PolyEps {
        PolyEps::from_coeffs(vec![int(c0), int(c1)])
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = Scalar::from_parts(PolyEps::one(), lin(1, 1)).unwrap();
        let b = Scalar::from_poly(lin(1, 1));
        assert!((&a * &b).is_one());
    }

    #[test]
    fn additive_inverse() {
        let e = Scalar::eps();
        assert!((&e + &(-&e)).is_zero());
    }

    #[test]
    fn eps_minus_inverse_common_denominator() {
        let e = Scalar::eps();
        let s = &e - &e.inv().unwrap();
        let expected = Scalar::from_parts(PolyEps::from_coeffs(vec![int(-1), int(0), int(1)]), PolyEps::eps()).unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.to_string(), "(-1+e^2)/e");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(
            Scalar::from_parts(PolyEps::one(), PolyEps::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn eval_substitutes() {
        let a = Scalar::from_parts(lin(1, 1), lin(1, 3)).unwrap();
        assert_eq!(a.eval(&rat(1, 5)).unwrap(), rat(3, 4));
        assert_eq!(Scalar::from_int(7).eval(&rat(1, 3)).unwrap(), int(7));
        let p = Scalar::from_parts(PolyEps::one(), lin(1, 2)).unwrap();
        assert!(matches!(p.eval(&rat(-1, 2)), Err(ScalarError::Pole { .. })));
        assert_eq!(a.eval(&int(0)), Err(ScalarError::ZeroEpsilon));
    }

    #[test]
    fn canonical_denominator_is_primitive_and_positive() {
        // (1/2 + e) / (-3/4 - 3/2 e) = -(2/3)
        let s = Scalar::from_parts(
            PolyEps::from_coeffs(vec![rat(1, 2), int(1)]),
            PolyEps::from_coeffs(vec![rat(-3, 4), rat(-3, 2)]),
        )
        .unwrap();
        assert_eq!(s, Scalar::from_ratio(-2, 3));
        // e / (-2 - 4e) = (-1/2 e)/(1 + 2e)
        let t = Scalar::from_parts(PolyEps::eps(), lin(-2, -4)).unwrap();
        assert_eq!(t.denom(), &lin(1, 2));
        assert_eq!(t.numer(), &PolyEps::from_coeffs(vec![int(0), rat(-1, 2)]));
    }

    #[test]
    fn rendering() {
        let a = Scalar::from_parts(lin(1, 1), lin(1, 3)).unwrap();
        assert_eq!(a.to_string(), "(1+e)/(1+3*e)");
        assert_eq!(Scalar::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(Scalar::zero().to_string(), "0");
        let w = Scalar::from_parts(
            PolyEps::from_coeffs(vec![int(-1), int(0), int(1)]),
            PolyEps::from_coeffs(vec![int(0), int(24)]),
        )
        .unwrap();
        assert_eq!(w.to_string(), "(-1/24+1/24*e^2)/e");
        let neg = -Scalar::eps();
        assert_eq!(neg.to_string(), "-e");
    }

    #[test]
    fn poly_div_rem_and_gcd() {
        // (e^2 - 1) = (e - 1)(e + 1)
        let p = PolyEps::from_coeffs(vec![int(-1), int(0), int(1)]);
        let (q, r) = p.div_rem(&lin(-1, 1)).unwrap();
        assert_eq!(q, lin(1, 1));
        assert!(r.is_zero());
        let g = p.gcd(&lin(2, 2));
        assert_eq!(g, lin(1, 1));
        assert!(PolyEps::zero().gcd(&PolyEps::zero()).is_zero());
    }
}
