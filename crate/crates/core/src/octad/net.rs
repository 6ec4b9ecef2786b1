use num_traits::Zero;

use super::{check_points, OctadError};
use crate::covariants::PLANE;
use crate::poly::rational::primitive_integer_vector;
use crate::poly::{macaulay_resultant_ternary, Poly, PolyMatrix, RatMatrix, Rational};
use crate::projective::{dot, points_det};

/// Index pairs `(a, b)`, `a <= b`, of the ten quadratic monomials in four variables.
const QUADRATIC_MONOMIALS: [(usize, usize); 10] =
    [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

/// Three symmetric 4x4 matrices with integer entries spanning a net of
/// quadrics, together with base points known to lie on every member.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricNet {
    generators: [RatMatrix; 3],
    basepoints: Vec<Vec<Rational>>,
}

impl QuadricNet {
    /// Validates symmetry, independence and membership of the base points.
    pub fn new(generators: [RatMatrix; 3], basepoints: Vec<Vec<Rational>>) -> Result<Self, OctadError> {
        for a in &generators {
            if a.nrows() != 4 || a.ncols() != 4 || a.transpose() != *a {
                return Err(OctadError::DimensionError(0));
            }
        }
        let flat = RatMatrix::from_rows(generators.iter().map(|a| a.to_rows().concat()).collect());
        let rank = flat.rank();
        if rank != 3 {
            return Err(OctadError::DimensionError(rank));
        }
        let net = QuadricNet { generators, basepoints };
        if let Some(i) = net.basepoints.iter().position(|p| !net.contains(p)) {
            return Err(OctadError::NotBasePoint(i + 1));
        }
        Ok(net)
    }

    pub fn generators(&self) -> &[RatMatrix; 3] {
        &self.generators
    }

    pub fn basepoints(&self) -> &[Vec<Rational>] {
        &self.basepoints
    }

    /// Same net with a different list of base points (each checked).
    pub fn with_basepoints(&self, points: Vec<Vec<Rational>>) -> Result<Self, OctadError> {
        QuadricNet::new(self.generators.clone(), points)
    }

    /// `M(q) = q0 A0 + q1 A1 + q2 A2`.
    pub fn matrix_at(&self, q: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(4, 4);
        for (a, c) in self.generators.iter().zip(q) {
            m = m.add(&a.scale(c));
        }
        m
    }

    /// `p^T A_k p`.
    pub fn value(&self, k: usize, p: &[Rational]) -> Rational {
        self.bilinear(k, p, p)
    }

    /// `p^T A_k q`.
    pub fn bilinear(&self, k: usize, p: &[Rational], q: &[Rational]) -> Rational {
        dot(p, &self.generators[k].mul_vec(q))
    }

    pub fn contains(&self, p: &[Rational]) -> bool {
        (0..3).all(|k| self.value(k, p).is_zero())
    }

    /// `x A0 + y A1 + z A2` as a matrix of linear forms.
    pub fn symbolic_matrix(&self) -> PolyMatrix {
        let vars: Vec<Poly> = PLANE.iter().map(|v| Poly::var(v)).collect();
        let rows = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let mut e = Poly::zero();
                        for (a, v) in self.generators.iter().zip(&vars) {
                            e = e + v.scale(&a[(i, j)]);
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows).expect("4x4")
    }

    /// The quadric `p^T A_k p` as a polynomial in `x0..x3`.
    pub fn quadric(&self, k: usize) -> Poly {
        let x: Vec<Poly> = (0..4).map(|i| Poly::var(&format!("x{i}"))).collect();
        let a = &self.generators[k];
        let mut out = Poly::zero();
        for i in 0..4 {
            for j in 0..4 {
                out = out + (&x[i] * &x[j]).scale(&a[(i, j)]);
            }
        }
        out
    }
}

fn evaluation_matrix(points: &[Vec<Rational>]) -> RatMatrix {
    RatMatrix::from_rows(
        points.iter().map(|p| QUADRATIC_MONOMIALS.iter().map(|&(a, b)| &p[a] * &p[b]).collect()).collect(),
    )
}

/// Dimension of the space of quadrics through the points.
pub(crate) fn quadric_space_dimension(points: &[Vec<Rational>]) -> usize {
    10 - evaluation_matrix(points).rank()
}

/// The net of quadrics through seven points of P^3.
pub fn net_from_heptad(points: &[Vec<Rational>]) -> Result<QuadricNet, OctadError> {
    let points = check_points(points, 7)?;
    let kernel = evaluation_matrix(&points).nullspace();
    if kernel.len() != 3 {
        return Err(OctadError::DimensionError(kernel.len()));
    }
    let half = Rational::new(1.into(), 2.into());
    let gens: Vec<RatMatrix> = kernel
        .iter()
        .map(|v| {
            let mut entries = vec![Rational::zero(); 16];
            for (c, &(a, b)) in v.iter().zip(&QUADRATIC_MONOMIALS) {
                if a == b {
                    entries[4 * a + a] = c.clone();
                } else {
                    entries[4 * a + b] = c * &half;
                    entries[4 * b + a] = c * &half;
                }
            }
            let entries = primitive_integer_vector(&entries);
            RatMatrix::from_rows(entries.chunks(4).map(<[Rational]>::to_vec).collect())
        })
        .collect();
    let [a0, a1, a2]: [RatMatrix; 3] = gens.try_into().expect("three generators");
    QuadricNet::new([a0, a1, a2], points)
}

/// `det(x A0 + y A1 + z A2)` with a smoothness certificate: the Macaulay
/// resultant of its three partial derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct HessianQuartic {
    pub quartic: Poly,
    pub resultant: Rational,
    pub smooth: bool,
}

pub fn hessian_quartic(net: &QuadricNet) -> HessianQuartic {
    let quartic = net.symbolic_matrix().det().with_scope(&PLANE);
    if quartic.is_zero() || !quartic.is_homogeneous_in(&PLANE, 4) {
        return HessianQuartic { quartic, resultant: Rational::zero(), smooth: false };
    }
    let partials: Vec<Poly> = PLANE.iter().map(|v| quartic.partial_derivative(v).expect("in scope")).collect();
    let resultant =
        macaulay_resultant_ternary([&partials[0], &partials[1], &partials[2]], PLANE).unwrap_or_else(|_| Rational::zero());
    let smooth = !resultant.is_zero();
    HessianQuartic { quartic, resultant, smooth }
}

/// Aronhold test for seven points: the net has dimension 3 and its Hessian
/// quartic is smooth. The 35 coplanarity determinants are reported as well.
#[derive(Debug, Clone, PartialEq)]
pub struct AronholdReport {
    /// Labels (1-based) of each quadruple and the determinant of its points.
    pub coplanarity: Vec<([usize; 4], Rational)>,
    pub no_four_coplanar: bool,
    pub net_dimension: usize,
    pub hessian: Option<HessianQuartic>,
    pub verdict: bool,
}

pub fn aronhold_check(points: &[Vec<Rational>]) -> Result<AronholdReport, OctadError> {
    let points = check_points(points, 7)?;
    let mut coplanarity = Vec::with_capacity(35);
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                for d in c + 1..7 {
                    let det = points_det(&[&points[a], &points[b], &points[c], &points[d]]);
                    coplanarity.push(([a + 1, b + 1, c + 1, d + 1], det));
                }
            }
        }
    }
    let no_four_coplanar = coplanarity.iter().all(|(_, d)| !d.is_zero());
    let net_dimension = quadric_space_dimension(&points);
    let hessian = match net_dimension {
        3 => Some(hessian_quartic(&net_from_heptad(&points)?)),
        _ => None,
    };
    let verdict = hessian.as_ref().is_some_and(|h| h.smooth);
    Ok(AronholdReport { coplanarity, no_four_coplanar, net_dimension, hessian, verdict })
}

/// The singular point of the quadric `M(q)` for `q` on the Hessian quartic.
pub fn steinerian_point(net: &QuadricNet, q: &[Rational]) -> Result<Vec<Rational>, OctadError> {
    if q.len() != 3 || q.iter().all(Zero::is_zero) {
        return Err(OctadError::DependentPencil);
    }
    let m = net.matrix_at(q);
    let rank = m.rank();
    if rank == 4 {
        return Err(OctadError::NotOnHessian);
    }
    if rank < 3 {
        return Err(OctadError::CorankTooHigh(4 - rank));
    }
    let kernel = m.nullspace();
    Ok(primitive_integer_vector(&kernel[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octad::standard_heptad;
    use crate::poly::rational::int;

    fn diagonal_net() -> QuadricNet {
        let diag = |d: [i64; 4]| {
            let mut m = RatMatrix::zeros(4, 4);
            for i in 0..4 {
                m[(i, i)] = int(d[i]);
            }
            m
        };
        QuadricNet::new([diag([1, 1, 1, 1]), diag([1, 2, 3, 4]), diag([1, 4, 9, 16])], vec![]).unwrap()
    }

    #[test]
    fn standard_net_contains_heptad() {
        let net = net_from_heptad(&standard_heptad()).unwrap();
        for p in standard_heptad() {
            assert!(net.contains(&p));
        }
        for a in net.generators() {
            assert!(a.to_rows().concat().iter().all(|c| c.is_integer()));
        }
    }

    #[test]
    fn collinear_points_are_rejected() {
        let pts: Vec<Vec<Rational>> = (0..7).map(|t| vec![int(1), int(t), int(0), int(0)]).collect();
        assert!(matches!(net_from_heptad(&pts), Err(OctadError::DimensionError(d)) if d > 3));
    }

    #[test]
    fn diagonal_hessian_is_four_lines() {
        let h = hessian_quartic(&diagonal_net());
        let (x, y, z) = (Poly::var("x"), Poly::var("y"), Poly::var("z"));
        let expected: Poly = (1..=4).map(|i| &x + &y.scale(&int(i)) + z.scale(&int(i * i))).product();
        assert_eq!(h.quartic, expected.with_scope(&PLANE));
        assert!(!h.smooth);
    }

    #[test]
    fn steinerian_on_diagonal_net() {
        let net = diagonal_net();
        // x + y + z is the first diagonal entry; (1, -1, 0) kills it
        let k = steinerian_point(&net, &[int(1), int(-1), int(0)]).unwrap();
        assert_eq!(k, vec![int(1), int(0), int(0), int(0)]);
        // (2, -3, 1) kills the first two entries: 2-3+1 = 0 and 2-6+4 = 0
        assert_eq!(steinerian_point(&net, &[int(2), int(-3), int(1)]), Err(OctadError::CorankTooHigh(2)));
        assert_eq!(steinerian_point(&net, &[int(1), int(0), int(0)]), Err(OctadError::NotOnHessian));
    }

    #[test]
    fn twisted_cubic_heptad_fails() {
        let pts: Vec<Vec<Rational>> = (0..7).map(|t| vec![int(1), int(t), int(t * t), int(t * t * t)]).collect();
        let report = aronhold_check(&pts).unwrap();
        assert_eq!(report.net_dimension, 3);
        assert!(!report.verdict);
    }
}
