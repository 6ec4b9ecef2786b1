use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::net::{hessian_quartic, QuadricNet};
use super::{Octad, OctadError};
use crate::poly::rational::int;
use crate::poly::{resultant_bivariate, univariate_gcd, univariate_squarefree_part, Poly, RatMatrix, Rational};
use crate::projective::{normalize, same_point};

pub const DEFAULT_SEED: u64 = 0x000c_7ad8;
const RETRIES: usize = 12;

/// Completes the seven base points of an Aronhold net to its Cayley octad.
pub fn eighth_point(net: &QuadricNet) -> Result<Octad, OctadError> {
    eighth_point_with_seed(net, DEFAULT_SEED)
}

/// Eliminates in random coordinates `x = T y`, chart `y0 = 1`: resultants in
/// `y3`, then in `y2`, give univariate polynomials in `y1` whose gcd vanishes
/// exactly at the eight base points. The seven known roots are divided out
/// and the remaining root is back-substituted.
pub fn eighth_point_with_seed(net: &QuadricNet, seed: u64) -> Result<Octad, OctadError> {
    let known = net.basepoints();
    if known.len() != 7 {
        return Err(OctadError::WrongCount { expected: 7, found: known.len() });
    }
    if !hessian_quartic(net).smooth {
        return Err(OctadError::NotAronhold);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let t = random_invertible(&mut rng);
        if let Some(p) = attempt(net, &t) {
            let mut points = known.to_vec();
            points.push(p);
            return Octad::new(points);
        }
    }
    Err(OctadError::EliminationDegenerate(RETRIES))
}

fn random_invertible<R: Rng>(rng: &mut R) -> RatMatrix {
    loop {
        let rows = (0..4).map(|_| (0..4).map(|_| int(rng.gen_range(-4..=4))).collect()).collect();
        let t = RatMatrix::from_rows(rows);
        if !t.det().is_zero() {
            return t;
        }
    }
}

fn attempt(net: &QuadricNet, t: &RatMatrix) -> Option<Vec<Rational>> {
    let t_inv = t.inverse()?;
    // known points in the new coordinates, dehomogenized
    let mut roots = Vec::with_capacity(7);
    for p in net.basepoints() {
        let y = t_inv.mul_vec(p);
        if y[0].is_zero() {
            return None;
        }
        let y1 = &y[1] / &y[0];
        if roots.contains(&y1) {
            return None;
        }
        roots.push(y1);
    }
    let ys = ["y1", "y2", "y3"];
    let coords: Vec<Poly> = std::iter::once(Poly::one()).chain(ys.iter().map(|v| Poly::var(v))).collect();
    let tt = t.transpose();
    let q: Vec<Poly> = net
        .generators()
        .iter()
        .map(|a| {
            let b = tt.mul(a).mul(t);
            let mut f = Poly::zero();
            for i in 0..4 {
                for j in 0..4 {
                    f = f + (&coords[i] * &coords[j]).scale(&b[(i, j)]);
                }
            }
            f
        })
        .collect();
    let r01 = resultant_bivariate(&q[0], &q[1], "y3").ok()?;
    let r02 = resultant_bivariate(&q[0], &q[2], "y3").ok()?;
    let r12 = resultant_bivariate(&q[1], &q[2], "y3").ok()?;
    let e1 = resultant_bivariate(&r01, &r02, "y2").ok()?;
    let e2 = resultant_bivariate(&r01, &r12, "y2").ok()?;
    if e1.is_zero() || e2.is_zero() {
        return None;
    }
    let e = univariate_squarefree_part(&univariate_gcd(&e1, &e2, "y1").ok()?, "y1").ok()?;
    if e.degree_in("y1") != 8 {
        return None;
    }
    let y1 = Poly::var("y1");
    let known: Poly = roots.iter().map(|r| &y1 - &Poly::constant(r.clone())).product();
    let last = e.exact_divide(&known).ok()?;
    if last.degree_in("y1") != 1 {
        return None;
    }
    let a1 = -last.coefficient("y1", 0).as_constant()? / last.coefficient("y1", 1).as_constant()?;
    let a2 = single_root(&[&r01, &r02, &r12], &[("y1", a1.clone())], "y2")?;
    let a3 = single_root(&q, &[("y1", a1.clone()), ("y2", a2.clone())], "y3")?;
    let x = normalize(&t.mul_vec(&[Rational::one(), a1, a2, a3]));
    if !net.contains(&x) || net.basepoints().iter().any(|p| same_point(p, &x)) {
        return None;
    }
    Some(x)
}

/// The unique common root in `var` of the specialized polynomials.
fn single_root<P: std::borrow::Borrow<Poly>>(polys: &[P], at: &[(&str, Rational)], var: &str) -> Option<Rational> {
    let mut g = Poly::zero();
    for p in polys {
        let s = p.borrow().evaluate(at);
        g = if g.is_zero() { s } else { univariate_gcd(&g, &s, var).ok()? };
    }
    if g.degree_in(var) != 1 {
        return None;
    }
    Some(-g.coefficient(var, 0).as_constant()? / g.coefficient(var, 1).as_constant()?)
}
