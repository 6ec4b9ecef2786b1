use num_traits::Zero;

use super::{Octad, OctadError};
use crate::poly::{RatMatrix, Rational};
use crate::projective::{dot, normalize, points_det};

/// Projection of `P1..P7` from `P8` to the plane, with the two general
/// position checks: no three images collinear, no six on a conic.
#[derive(Debug, Clone, PartialEq)]
pub struct GaleReport {
    /// Three linear forms on P^3 vanishing at `P8`.
    pub forms: [Vec<Rational>; 3],
    pub points: Vec<Vec<Rational>>,
    /// Labels of each triple and the determinant of the projected points.
    pub collinearity: Vec<([usize; 3], Rational)>,
    /// Labels of each six-subset and the rank of its 6x6 conic matrix.
    pub conic_ranks: Vec<([usize; 6], usize)>,
    pub no_three_collinear: bool,
    pub no_six_on_conic: bool,
}

/// Uses the canonical forms read off the reduced row echelon form of `P8^T`.
pub fn gale_transform(octad: &Octad) -> Result<GaleReport, OctadError> {
    let p8 = octad.point(8)?.to_vec();
    let kernel = RatMatrix::from_rows(vec![p8]).nullspace();
    let forms = [kernel[0].clone(), kernel[1].clone(), kernel[2].clone()];
    gale_transform_with_forms(octad, forms)
}

/// Projection through caller-chosen forms; they must vanish at `P8` and be
/// independent.
pub fn gale_transform_with_forms(octad: &Octad, forms: [Vec<Rational>; 3]) -> Result<GaleReport, OctadError> {
    let p8 = octad.point(8)?;
    let m = RatMatrix::from_rows(forms.to_vec());
    if m.rank() != 3 || forms.iter().any(|l| !dot(l, p8).is_zero()) {
        return Err(OctadError::ProjectionUndefined(8));
    }
    let mut points = Vec::with_capacity(7);
    for label in 1..=7 {
        let image = m.mul_vec(octad.point(label)?);
        if image.iter().all(Zero::is_zero) {
            return Err(OctadError::ProjectionUndefined(label));
        }
        points.push(normalize(&image));
    }
    let mut collinearity = Vec::with_capacity(35);
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                let det = points_det(&[&points[a], &points[b], &points[c]]);
                collinearity.push(([a + 1, b + 1, c + 1], det));
            }
        }
    }
    let conic_row = |p: &[Rational]| -> Vec<Rational> {
        vec![&p[0] * &p[0], &p[0] * &p[1], &p[0] * &p[2], &p[1] * &p[1], &p[1] * &p[2], &p[2] * &p[2]]
    };
    let conic_ranks: Vec<([usize; 6], usize)> = (0..7)
        .map(|skip| {
            let labels: Vec<usize> = (0..7).filter(|&i| i != skip).collect();
            let rank = RatMatrix::from_rows(labels.iter().map(|&i| conic_row(&points[i])).collect()).rank();
            (std::array::from_fn(|k| labels[k] + 1), rank)
        })
        .collect();
    let no_three_collinear = collinearity.iter().all(|(_, d)| !d.is_zero());
    let no_six_on_conic = conic_ranks.iter().all(|(_, r)| *r == 6);
    Ok(GaleReport { forms, points, collinearity, conic_ranks, no_three_collinear, no_six_on_conic })
}
