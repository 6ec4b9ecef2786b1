use num_traits::{One, Zero};

use super::net::QuadricNet;
use super::OctadError;
use crate::covariants::{cross_ratio, j_from_cross_ratio, j_of_binary_quartic};
use crate::poly::rational::int;
use crate::poly::{univariate_gcd, univariate_rational_roots, Poly, PolyMatrix, Rational};
use crate::projective::cross;

/// Bit bound for the rational-root search on the pencil determinant.
const ROOT_SEARCH_BITS: u64 = 48;

/// The pencil `a M(p1) + b M(p2)` of a net and the elliptic curve it cuts
/// out: a double cover of the pencil line branched at its singular members.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilFiber {
    pub points: [Vec<Rational>; 2],
    /// `d(a, b) = det(a M(p1) + b M(p2))`.
    pub determinant: Poly,
    /// `[b0, .., b4]` with `d = Σ b_{4-r} a^r b^{4-r}`.
    pub coefficients: [Rational; 5],
    /// `gcd(d(a,1), d'(a,1))` in `a`; constant exactly when `d` is squarefree.
    pub squarefree_witness: Poly,
    /// The four singular parameters `a/b` when all are rational (`None` for
    /// `b = 0`), sorted with the root at infinity last.
    pub roots: Option<Vec<Option<Rational>>>,
    /// `(λ1-λ3)(λ2-λ0) / ((λ1-λ0)(λ2-λ3))` for the rational roots `λ0..λ3`.
    pub cross_ratio: Option<Rational>,
    pub j_cross_ratio: Option<Rational>,
    pub j: Rational,
}

impl PencilFiber {
    /// The line of the net plane through the two points, as a dual point.
    pub fn dual_point(&self) -> Vec<Rational> {
        cross(&self.points[0], &self.points[1])
    }

    pub fn routes_agree(&self) -> bool {
        self.j_cross_ratio.as_ref().is_none_or(|j| j == &self.j)
    }
}

pub fn pencil_fiber(net: &QuadricNet, p1: &[Rational], p2: &[Rational]) -> Result<PencilFiber, OctadError> {
    if p1.len() != 3 || p2.len() != 3 || cross(p1, p2).iter().all(Zero::is_zero) {
        return Err(OctadError::DependentPencil);
    }
    let (m1, m2) = (net.matrix_at(p1), net.matrix_at(p2));
    let (a, b) = (Poly::var("a"), Poly::var("b"));
    let rows = (0..4)
        .map(|i| (0..4).map(|j| a.scale(&m1[(i, j)]) + b.scale(&m2[(i, j)])).collect())
        .collect();
    let determinant = PolyMatrix::from_rows(rows).expect("4x4").det().with_scope(&["a", "b"]);
    if determinant.is_zero() {
        return Err(OctadError::DegeneratePencil);
    }
    let coefficients: [Rational; 5] = std::array::from_fn(|k| {
        determinant.coefficient_of(&[("a", 4 - k as u32), ("b", k as u32)]).as_constant().unwrap_or_else(Rational::zero)
    });
    let affine = determinant.evaluate(&[("b", Rational::one())]).with_scope(&["a"]);
    let degree = affine.degree_in("a");
    let squarefree_witness = univariate_gcd(&affine, &affine.partial_derivative("a").expect("in scope"), "a")
        .map_err(|_| OctadError::DegeneratePencil)?;
    if degree < 3 || squarefree_witness.total_degree() > 0 {
        return Err(OctadError::NonSquarefree);
    }
    let j = j_of_binary_quartic(&coefficients)?;

    let roots = univariate_rational_roots(&affine, "a", ROOT_SEARCH_BITS)
        .ok()
        .flatten()
        .filter(|r| r.len() == degree as usize)
        .map(|r| {
            let mut out: Vec<Option<Rational>> = r.into_iter().map(Some).collect();
            if degree == 3 {
                out.push(None);
            }
            out
        });
    let (cross_ratio, j_cross_ratio) = match &roots {
        Some(r) => {
            let finite = to_finite(r);
            let cr = cross_ratio(&[finite[1].clone(), finite[0].clone(), finite[3].clone(), finite[2].clone()])?;
            let jc = j_from_cross_ratio(&cr)?;
            (Some(cr), Some(jc))
        }
        None => (None, None),
    };
    Ok(PencilFiber {
        points: [p1.to_vec(), p2.to_vec()],
        determinant,
        coefficients,
        squarefree_witness,
        roots,
        cross_ratio,
        j_cross_ratio,
        j,
    })
}

/// Moves a root at infinity to a finite place with `t -> 1/(t - k)`, which
/// preserves cross-ratios.
fn to_finite(roots: &[Option<Rational>]) -> Vec<Rational> {
    if roots.iter().all(Option::is_some) {
        return roots.iter().map(|r| r.clone().unwrap()).collect();
    }
    let finite: Vec<&Rational> = roots.iter().flatten().collect();
    let k = (0..).map(int).find(|k| !finite.contains(&k)).expect("unbounded");
    roots.iter().map(|r| r.as_ref().map_or_else(Rational::zero, |t| (t - &k).recip())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariants::j_from_roots;
    use crate::poly::RatMatrix;

    fn diag(d: [i64; 4]) -> RatMatrix {
        let mut m = RatMatrix::zeros(4, 4);
        for i in 0..4 {
            m[(i, i)] = int(d[i]);
        }
        m
    }

    #[test]
    fn diagonal_pencil() {
        let net = QuadricNet::new([diag([1, 1, 1, 1]), diag([0, 1, 2, 4]), diag([0, 0, 1, 3])], vec![]).unwrap();
        let e = [int(1), int(0), int(0)];
        let f = [int(0), int(1), int(0)];
        let fiber = pencil_fiber(&net, &e, &f).unwrap();
        let expected = j_from_cross_ratio(&int(3)).unwrap();
        assert_eq!(fiber.j, expected);
        assert_eq!(fiber.j_cross_ratio, Some(expected.clone()));
        assert_eq!(j_from_roots(&[int(0), int(1), int(2), int(4)]).unwrap(), expected);
    }

    #[test]
    fn repeated_eigenvalue() {
        let net = QuadricNet::new([diag([1, 1, 1, 1]), diag([0, 1, 1, 4]), diag([0, 0, 1, 3])], vec![]).unwrap();
        let r = pencil_fiber(&net, &[int(1), int(0), int(0)], &[int(0), int(1), int(0)]);
        assert_eq!(r.unwrap_err(), OctadError::NonSquarefree);
    }

    #[test]
    fn root_at_infinity() {
        // det(a I + b diag(0,1,2,4)) with the roles of the points swapped
        let net = QuadricNet::new([diag([1, 1, 1, 1]), diag([0, 1, 2, 4]), diag([0, 0, 1, 3])], vec![]).unwrap();
        let fiber = pencil_fiber(&net, &[int(0), int(1), int(0)], &[int(1), int(0), int(0)]).unwrap();
        assert!(fiber.roots.as_ref().unwrap().contains(&None));
        assert!(fiber.routes_agree());
    }
}
