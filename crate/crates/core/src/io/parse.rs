use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ParseError, ParseErrorKind};
use crate::poly::{Poly, Rational};

const MAX_EXPONENT: u32 = 4096;

/// Expression text together with the variables it may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySource {
    pub text: String,
    pub declared_variables: Vec<String>,
}

impl PolySource {
    pub fn new<S: AsRef<str>>(text: &str, vars: &[S]) -> Self {
        PolySource {
            text: text.to_string(),
            declared_variables: vars.iter().map(|v| v.as_ref().to_string()).collect(),
        }
    }
}

/// Parses `src.text`; every identifier must be declared. The result's scope
/// contains all declared variables.
pub fn parse_poly(src: &PolySource) -> Result<Poly, ParseError> {
    let mut p = Parser { text: &src.text, bytes: src.text.as_bytes(), pos: 0, declared: &src.declared_variables };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.unexpected());
    }
    Ok(poly.with_scope(&src.declared_variables))
}

/// Parses a single rational literal such as `-3`, `7/2` or `-1/8`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let mut p = Parser { text, bytes: text.as_bytes(), pos: 0, declared: &[] };
    p.skip_ws();
    let negative = p.eat(b'-');
    p.skip_ws();
    if !p.peek().is_some_and(|c| c.is_ascii_digit()) {
        return Err(p.unexpected_or(ParseErrorKind::Expected("a rational number")));
    }
    let q = p.rational()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.unexpected());
    }
    Ok(if negative { -q } else { q })
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    declared: &'a [String],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        ParseError::at(self.text, offset, kind)
    }

    fn unexpected_or(&mut self, at_end: ParseErrorKind) -> ParseError {
        self.skip_ws();
        match self.text[self.pos..].chars().next() {
            Some(c) => self.error(self.pos, ParseErrorKind::UnexpectedChar(c)),
            None => self.error(self.pos, at_end),
        }
    }

    fn unexpected(&mut self) -> ParseError {
        self.unexpected_or(ParseErrorKind::UnexpectedEnd)
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    /// `nat ('^' nat)*`, right-associative.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let e = self.nat_exponent()?;
        if self.eat(b'^') {
            let rest = self.exponent()?;
            let big = BigInt::from(e).pow(rest);
            return u32::try_from(&big)
                .ok()
                .filter(|&v| v <= MAX_EXPONENT)
                .ok_or_else(|| self.error(start, ParseErrorKind::ExponentTooLarge(big.to_string())));
        }
        Ok(e)
    }

    fn nat_exponent(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Some(b'-') => return Err(self.error(self.pos, ParseErrorKind::BadExponent)),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.unexpected_or(ParseErrorKind::UnexpectedEnd)),
        }
        let start = self.pos;
        let digits = self.digits();
        if matches!(self.bytes.get(self.pos), Some(b'.') | Some(b'/')) {
            return Err(self.error(start, ParseErrorKind::BadExponent));
        }
        digits
            .parse::<u32>()
            .ok()
            .filter(|&v| v <= MAX_EXPONENT)
            .ok_or_else(|| self.error(start, ParseErrorKind::ExponentTooLarge(digits.to_string())))
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits().parse().expect("digits");
        if self.eat(b'/') {
            let at = self.pos;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.unexpected_or(ParseErrorKind::Expected("a denominator")));
            }
            let den: BigInt = self.digits().parse().expect("digits");
            if den.is_zero() {
                return Err(self.error(at, ParseErrorKind::ZeroDenominator));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::new(num, BigInt::one()))
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(self.rational()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                if !self.declared.iter().any(|v| v == name) {
                    return Err(self.error(start, ParseErrorKind::UndeclaredVariable(name.to_string())));
                }
                Ok(Poly::var(name))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.unexpected_or(ParseErrorKind::Expected("`)`")));
                }
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}
