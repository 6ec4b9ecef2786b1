use num_traits::Zero;
use rayon::prelude::*;

use super::net::{HessianQuartic, QuadricNet};
use super::{Octad, OctadError};
use crate::covariants::PLANE;
use crate::poly::{square_up_to_constant, Poly, RatMatrix, Rational};
use crate::projective::normalize;

/// The pencil of net quadrics containing the line `P_i P_j`, seen as a line
/// of the net plane, with the certificate `H|_line = c * root^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bitangent {
    pub pair: (usize, usize),
    /// Coefficients `(l0, l1, l2)` of the line `l0 x + l1 y + l2 z = 0`.
    pub line: Vec<Rational>,
    /// Two net points spanning the line; the restriction is in `a`, `b`
    /// with `a * first + b * second`.
    pub span: [Vec<Rational>; 2],
    pub restriction: Poly,
    pub constant: Rational,
    pub root: Poly,
}

impl Bitangent {
    /// Re-checks `restriction == constant * root^2`.
    pub fn certificate_holds(&self) -> bool {
        !self.restriction.is_zero() && self.restriction == self.root.pow(2).scale(&self.constant)
    }
}

/// Bitangent line for the labels `i != j` in 1..8.
pub fn bitangent_line(
    octad: &Octad,
    net: &QuadricNet,
    hessian: &HessianQuartic,
    i: usize,
    j: usize,
) -> Result<Bitangent, OctadError> {
    if i == j {
        return Err(OctadError::SamePair(i));
    }
    let (pi, pj) = (octad.point(i)?, octad.point(j)?);
    // a net quadric through P_i and P_j contains their line iff it also
    // vanishes at P_i + P_j, i.e. iff P_i^T A P_j = 0
    let line: Vec<Rational> = (0..3).map(|k| net.bilinear(k, pi, pj)).collect();
    if line.iter().all(Zero::is_zero) {
        return Err(OctadError::SubfamilyDimension(i, j));
    }
    let line = normalize(&line);
    let span = RatMatrix::from_rows(vec![line.clone()]).nullspace();
    let (a, b) = (Poly::var("a"), Poly::var("b"));
    let bindings: Vec<(&str, Poly)> =
        (0..3).map(|k| (PLANE[k], a.scale(&span[0][k]) + b.scale(&span[1][k]))).collect();
    let restriction = hessian.quartic.substitute(&bindings);
    let (constant, root) = square_up_to_constant(&restriction).ok_or(OctadError::NotSquare(i, j))?;
    Ok(Bitangent {
        pair: (i.min(j), i.max(j)),
        line,
        span: [span[0].clone(), span[1].clone()],
        restriction,
        constant,
        root,
    })
}

/// All 28 bitangents in the order (1,2), (1,3), .., (7,8).
pub fn bitangents(
    octad: &Octad,
    net: &QuadricNet,
    hessian: &HessianQuartic,
    parallel: bool,
) -> Result<Vec<Bitangent>, OctadError> {
    let pairs: Vec<(usize, usize)> = (1..=8).flat_map(|i| (i + 1..=8).map(move |j| (i, j))).collect();
    let one = |&(i, j): &(usize, usize)| bitangent_line(octad, net, hessian, i, j);
    if parallel {
        pairs.par_iter().map(one).collect()
    } else {
        pairs.iter().map(one).collect()
    }
}
