//! Parsers for the element grammar and for scalar expressions in `e`.
//!
//! ```text
//! element := "0" | ["-"] term (("+" | "-") term)*
//! term    := [coeff "*"] basis
//! coeff   := int ["/" int] | "(" scalar ")"
//! basis   := "d(" int ")" | "h(" odd "/2)" | "c" | "l"
//! scalar  := sum of products of "e", integers, "(...)", with + - * / ^
//! ```
//!
//! Both accept exactly what `Display` prints for `Element` and `Scalar`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{Basis, Element};
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl fmt::Display) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a digit");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat(b'-');
        let start = self.pos;
        let value = self.digits()?;
        let value = if negative { -value } else { value };
        match i64::try_from(value) {
            Ok(v) => Ok(v),
            Err(_) => Err(ParseError {
                offset: start,
                message: "index out of range".into(),
            }),
        }
    }
}

/// Parses a scalar expression in `e` such as `(1+e)/(1+3*e)` or `-3/4`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let mut c = Cursor::new(text);
    let s = scalar_sum(&mut c)?;
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    Ok(s)
}

fn scalar_sum(c: &mut Cursor) -> Result<Scalar, ParseError> {
    let mut acc = scalar_product(c)?;
    loop {
        if c.eat(b'+') {
            acc = &acc + &scalar_product(c)?;
        } else if c.eat(b'-') {
            acc = &acc - &scalar_product(c)?;
        } else {
            return Ok(acc);
        }
    }
}

fn scalar_product(c: &mut Cursor) -> Result<Scalar, ParseError> {
    let mut acc = scalar_unary(c)?;
    loop {
        if c.eat(b'*') {
            acc = &acc * &scalar_unary(c)?;
        } else if c.peek() == Some(b'/') {
            let at = c.pos;
            c.pos += 1;
            let rhs = scalar_unary(c)?;
            acc = acc.checked_div(&rhs).map_err(|_| ParseError {
                offset: at,
                message: "division by zero".into(),
            })?;
        } else {
            return Ok(acc);
        }
    }
}

fn scalar_unary(c: &mut Cursor) -> Result<Scalar, ParseError> {
    if c.eat(b'-') {
        return Ok(-scalar_unary(c)?);
    }
    let base = scalar_atom(c)?;
    if !c.eat(b'^') {
        return Ok(base);
    }
    let at = c.pos;
    let exp = c.digits()?;
    let exp = u32::try_from(exp).ok().filter(|e| *e <= 64).ok_or(ParseError {
        offset: at,
        message: "exponent too large".into(),
    })?;
    Ok((0..exp).fold(Scalar::one(), |acc, _| &acc * &base))
}

fn scalar_atom(c: &mut Cursor) -> Result<Scalar, ParseError> {
    match c.peek() {
        Some(b'(') => {
            c.pos += 1;
            let s = scalar_sum(c)?;
            c.expect(b')')?;
            Ok(s)
        }
        Some(b'e') => {
            c.pos += 1;
            Ok(Scalar::eps())
        }
        Some(d) if d.is_ascii_digit() => Ok(Scalar::from_rational(Rational::from_integer(c.digits()?))),
        Some(_) => c.err("expected a number, 'e' or '('"),
        None => c.err("unexpected end of input"),
    }
}

/// Parses an element such as `d(2) + 3*h(1/2) - c`.
pub fn parse_element(text: &str) -> Result<Element, ParseError> {
    let mut c = Cursor::new(text);
    if c.peek() == Some(b'0') {
        let save = c.pos;
        c.pos += 1;
        if c.at_end() {
            return Ok(Element::zero());
        }
        c.pos = save;
    }
    let mut out = Element::zero();
    let mut negative = c.eat(b'-');
    loop {
        let (coeff, b) = term(&mut c)?;
        out.add_term(b, if negative { -coeff } else { coeff });
        if c.at_end() {
            return Ok(out);
        }
        negative = if c.eat(b'+') {
            false
        } else if c.eat(b'-') {
            true
        } else {
            return c.err("expected '+' or '-'");
        };
    }
}

fn term(c: &mut Cursor) -> Result<(Scalar, Basis), ParseError> {
    let coeff = match c.peek() {
        Some(b'(') => {
            c.pos += 1;
            let s = scalar_sum(c)?;
            c.expect(b')')?;
            c.expect(b'*')?;
            Some(s)
        }
        Some(d) if d.is_ascii_digit() => {
            let num = c.digits()?;
            let mut r = Rational::from_integer(num);
            if c.peek() == Some(b'/') {
                c.pos += 1;
                let at = c.pos;
                let den = c.digits()?;
                if den == BigInt::from(0) {
                    return Err(ParseError {
                        offset: at,
                        message: "division by zero".into(),
                    });
                }
                r /= Rational::from_integer(den);
            }
            c.expect(b'*')?;
            Some(Scalar::from_rational(r))
        }
        _ => None,
    };
    Ok((coeff.unwrap_or_else(Scalar::one), basis(c)?))
}

fn basis(c: &mut Cursor) -> Result<Basis, ParseError> {
    match c.peek() {
        Some(b'c') => {
            c.pos += 1;
            Ok(Basis::C)
        }
        Some(b'l') => {
            c.pos += 1;
            Ok(Basis::L)
        }
        Some(b'd') => {
            c.pos += 1;
            c.expect(b'(')?;
            let m = c.signed_int()?;
            c.expect(b')')?;
            Ok(Basis::D(m))
        }
        Some(b'h') => {
            c.pos += 1;
            c.expect(b'(')?;
            c.skip_ws();
            let at = c.pos;
            let p = c.signed_int()?;
            c.expect(b'/')?;
            let two = c.digits()?;
            if two != BigInt::from(2) {
                return c.err("h index must be written over 2");
            }
            c.expect(b')')?;
            if p.rem_euclid(2) != 1 {
                return Err(ParseError {
                    offset: at,
                    message: format!("h index {p}/2 is not an odd half"),
                });
            }
            Ok(Basis::H((p - 1).div_euclid(2)))
        }
        Some(_) => c.err("expected a basis vector d(..), h(../2), c or l"),
        None => c.err("unexpected end of input"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Basis::*;

    #[test]
    fn grammar_examples() {
        let x = parse_element("d(2) + 3*h(1/2) - c").unwrap();
        assert_eq!(
            x,
            Element::from_terms([
                (D(2), Scalar::one()),
                (H(0), Scalar::from_int(3)),
                (C, Scalar::from_int(-1))
            ])
        );
        assert!(parse_element("1/2*l - 1/2*l").unwrap().is_zero());
        assert!(parse_element("0").unwrap().is_zero());
        assert_eq!(parse_element("h(-1/2)").unwrap(), Element::basis(H(-1)));
        assert_eq!(
            parse_element("-h(-3/2)").unwrap(),
            Element::term(H(-2), Scalar::from_int(-1))
        );
    }

    #[test]
    fn rejects_even_halves_with_offset() {
        let e = parse_element("h(2/2)").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.message.contains("odd"));
        let e = parse_element("d(1) + x").unwrap_err();
        assert_eq!(e.offset, 7);
    }

    #[test]
    fn scalar_round_trip() {
        for text in ["(1+e)/(1+3*e)", "-3/4", "(-1/24+1/24*e^2)/e", "-e", "1/2*e^2", "0"] {
            let s = parse_scalar(text).unwrap();
            assert_eq!(s.to_string(), text);
        }
        let coeff = parse_scalar("(1+e)/(1+3*e)").unwrap();
        let x = Element::term(D(3), coeff);
        assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }
}
