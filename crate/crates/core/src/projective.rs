//! Small helpers for points of projective space given by rational
//! coordinate vectors.

use num_traits::Zero;

use crate::poly::rational::primitive_integer_vector;
use crate::poly::{RatMatrix, Rational};

/// Representative with coprime integer entries and first nonzero entry positive.
pub fn normalize(p: &[Rational]) -> Vec<Rational> {
    primitive_integer_vector(p)
}

/// Whether two nonzero vectors span the same line.
pub fn same_point(a: &[Rational], b: &[Rational]) -> bool {
    a.len() == b.len() && normalize(a) == normalize(b)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Cross product of two vectors of length 3: the line through two points of
/// the plane, or the meet of two lines.
pub fn cross(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Determinant of the square matrix whose columns are the given points.
pub fn points_det(points: &[&[Rational]]) -> Rational {
    let cols: Vec<Vec<Rational>> = points.iter().map(|p| p.to_vec()).collect();
    RatMatrix::from_columns(&cols).det()
}

/// Matrix sending the standard frame `e_0, .., e_n, e_0 + .. + e_n` to the
/// first `n + 2` given points, or `None` if they are not in general position.
fn frame_matrix(points: &[Vec<Rational>], n1: usize) -> Option<RatMatrix> {
    let basis = RatMatrix::from_columns(&points[..n1]);
    let inv = basis.inverse()?;
    let c = inv.mul_vec(&points[n1]);
    if c.iter().any(Zero::is_zero) {
        return None;
    }
    let cols: Vec<Vec<Rational>> = (0..n1).map(|i| points[i].iter().map(|x| x * &c[i]).collect()).collect();
    Some(RatMatrix::from_columns(&cols))
}

/// A matrix `T` with `T a_i ~ b_i` for every `i`, when one exists. The first
/// `n + 2` points of `a` (in `P^n`) must be in general position.
pub fn projective_equivalence(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Option<RatMatrix> {
    if a.len() != b.len() || a.is_empty() {
        return None;
    }
    let n1 = a[0].len();
    if a.len() < n1 + 1 {
        return None;
    }
    let fa = frame_matrix(a, n1)?;
    let fb = frame_matrix(b, n1)?;
    let t = fb.mul(&fa.inverse()?);
    a.iter().zip(b).all(|(p, q)| same_point(&t.mul_vec(p), q)).then_some(t)
}
