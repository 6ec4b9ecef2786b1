use num_traits::Zero;

use super::net::QuadricNet;
use super::{Octad, OctadError};
use crate::poly::{Poly, RatMatrix, Rational};
use crate::projective::normalize;

/// Output of the standard Cremona transformation centered at four octad points.
#[derive(Debug, Clone, PartialEq)]
pub struct CremonaResult {
    pub center: [usize; 4],
    /// Columns are the center points; `x = S y` puts the center at the
    /// coordinate simplex.
    pub normalization: RatMatrix,
    pub octad: Octad,
    pub net: QuadricNet,
    /// `det(x B0 + y B1 + z B2)` of the transformed net.
    pub determinant: Poly,
    /// The same determinant for the normalized net `S^T A_k S`.
    pub normalized_determinant: Poly,
    /// `det(S)^2`: the new determinant is this multiple of the original one.
    pub scalar: Rational,
    pub determinant_preserved: bool,
}

/// Proper transform of the net under `y -> (1/y0 : 1/y1 : 1/y2 : 1/y3)`
/// after moving the center points (labels in 1..8) to the coordinate
/// simplex. The center labels receive the simplex points `e_0..e_3` in the
/// order given; every other point `y` goes to `(y1y2y3 : y0y2y3 : y0y1y3 : y0y1y2)`.
pub fn cremona_octad(octad: &Octad, net: &QuadricNet, center: [usize; 4]) -> Result<CremonaResult, OctadError> {
    for (k, &c) in center.iter().enumerate() {
        octad.point(c)?;
        if center[..k].contains(&c) {
            return Err(OctadError::DependentCenter);
        }
    }
    let cols: Vec<Vec<Rational>> = center.iter().map(|&c| octad.point(c).unwrap().to_vec()).collect();
    let s = RatMatrix::from_columns(&cols);
    let s_inv = s.inverse().ok_or(OctadError::DependentCenter)?;

    let normalized: Vec<RatMatrix> = net.generators().iter().map(|a| s.transpose().mul(a).mul(&s)).collect();
    let transformed: Vec<RatMatrix> = normalized.iter().map(complementary).collect();

    let mut points = Vec::with_capacity(8);
    for label in 1..=8 {
        if let Some(m) = center.iter().position(|&c| c == label) {
            let mut e = vec![Rational::zero(); 4];
            e[m] = Rational::from_integer(1.into());
            points.push(e);
            continue;
        }
        let y = s_inv.mul_vec(octad.point(label)?);
        if y.iter().any(Zero::is_zero) {
            return Err(OctadError::CremonaUndefined(label));
        }
        let image: Vec<Rational> = (0..4)
            .map(|i| (0..4).filter(|&k| k != i).map(|k| y[k].clone()).product())
            .collect();
        points.push(normalize(&image));
    }
    let octad = Octad::new(points)?;
    let [b0, b1, b2]: [RatMatrix; 3] = transformed.try_into().expect("three generators");
    let new_net = QuadricNet::new([b0, b1, b2], octad.points().to_vec())?;
    let [n0, n1, n2]: [RatMatrix; 3] = normalized.try_into().expect("three generators");
    let normalized_net = QuadricNet::new([n0, n1, n2], vec![])?;

    let determinant = new_net.symbolic_matrix().det();
    let normalized_determinant = normalized_net.symbolic_matrix().det();
    let original = net.symbolic_matrix().det();
    let ds = s.det();
    let scalar = &ds * &ds;
    let determinant_preserved = determinant == normalized_determinant && determinant == original.scale(&scalar);
    Ok(CremonaResult {
        center,
        normalization: s,
        octad,
        net: new_net,
        determinant,
        normalized_determinant,
        scalar,
        determinant_preserved,
    })
}

/// `B[γ][δ] = A[α][β]` whenever `{α, β, γ, δ} = {0, 1, 2, 3}`; zero diagonal.
fn complementary(a: &RatMatrix) -> RatMatrix {
    let mut b = RatMatrix::zeros(4, 4);
    for g in 0..4 {
        for d in 0..4 {
            if g == d {
                continue;
            }
            let rest: Vec<usize> = (0..4).filter(|&k| k != g && k != d).collect();
            b[(g, d)] = a[(rest[0], rest[1])].clone();
        }
    }
    b
}
