use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::{parse_rational, ParseError, ParseErrorKind};
use crate::poly::Rational;

/// Ambient space of a point: the plane, projective 3-space, or the weighted
/// space P(1,1,1,2,3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    P2,
    P3,
    P11123,
}

impl Ambient {
    pub fn arity(self) -> usize {
        match self {
            Ambient::P2 => 3,
            Ambient::P3 => 4,
            Ambient::P11123 => 5,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::P2 => "P2",
            Ambient::P3 => "P3",
            Ambient::P11123 => "P11123",
        })
    }
}

impl FromStr for Ambient {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "P2" => Ok(Ambient::P2),
            "P3" => Ok(Ambient::P3),
            "P11123" => Ok(Ambient::P11123),
            _ => Err(format!("unknown ambient `{s}`")),
        }
    }
}

/// Rational coordinates of a point, not all zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSource {
    pub coordinates: Vec<Rational>,
    pub ambient: Ambient,
}

impl PointSource {
    /// Checks arity and non-vanishing; the error positions are relative to an empty line.
    pub fn new(coordinates: Vec<Rational>, ambient: Ambient) -> Result<Self, ParseErrorKind> {
        if coordinates.len() != ambient.arity() {
            return Err(ParseErrorKind::WrongArity { expected: ambient.arity(), found: coordinates.len() });
        }
        if coordinates.iter().all(Zero::is_zero) {
            return Err(ParseErrorKind::ZeroPoint);
        }
        Ok(PointSource { coordinates, ambient })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coordinates
    }
}

/// Parses one comma-separated point.
pub fn parse_point(text: &str, ambient: Ambient) -> Result<PointSource, ParseError> {
    parse_line(text, 0, ambient, text)
}

fn parse_line(line: &str, line_offset: usize, ambient: Ambient, full: &str) -> Result<PointSource, ParseError> {
    let mut coords = Vec::new();
    let mut field_start = 0;
    for field in line.split(',') {
        let q = parse_rational(field).map_err(|e| ParseError::at(full, line_offset + field_start + e.offset, e.kind))?;
        coords.push(q);
        field_start += field.len() + 1;
    }
    PointSource::new(coords, ambient).map_err(|kind| ParseError::at(full, line_offset, kind))
}

/// Parses a points file: one point per line, `#` starts a comment, blank
/// lines are skipped.
pub fn parse_points(text: &str, ambient: Ambient) -> Result<Vec<PointSource>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.split('#').next().unwrap_or("");
        let line = line.trim_end_matches(['\n', '\r']);
        if !line.trim().is_empty() {
            out.push(parse_line(line, offset, ambient, text)?);
        }
        offset += raw.len();
    }
    Ok(out)
}
