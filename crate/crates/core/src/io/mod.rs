//! Text formats: the polynomial grammar, the canonical printer and point files.
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | base ('^' nat)*
//! base     := rational | ident | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//!
//! Multiplication must be written out: `xy` is a single identifier.

mod parse;
mod points;
mod print;

use thiserror::Error;

pub use parse::{parse_poly, parse_rational, PolySource};
pub use points::{parse_point, parse_points, Ambient, PointSource};
pub use print::{print_poly, print_rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),
    #[error("exponent must be a non-negative integer")]
    BadExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("expected {expected} coordinates, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("all coordinates are zero")]
    ZeroPoint,
}

/// A parse failure with its position (1-based line and column, 0-based byte offset).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub offset: usize,
}

impl ParseError {
    pub(crate) fn at(text: &str, offset: usize, kind: ParseErrorKind) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { kind, line, column, offset }
    }
}
