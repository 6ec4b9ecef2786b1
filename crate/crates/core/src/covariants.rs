//! Covariants of a plane quartic: the line restriction `b0..b4`, the binary
//! invariants `h2`, `h3`, the forms `g4`, `g6` on the dual plane, the dual
//! curve and the j-function.
//!
//! Everything is computed in the chart `u != 0` of the dual plane: the line
//! `sx + ty + uz = 0` is parametrized by `[x : y]`. The divisibility of `h2`
//! by `u^4` and of `h3` by `u^6` is checked on every call.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::io::PointSource;
use crate::poly::rational::{int, rat};
use crate::poly::{Poly, PolyError, Rational};

/// Names reserved by the pipeline; a quartic may not use them as parameters.
pub const RESERVED: [&str; 6] = ["s", "t", "u", "v", "w", "r"];
pub const PLANE: [&str; 3] = ["x", "y", "z"];
pub const DUAL: [&str; 3] = ["s", "t", "u"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CovariantError {
    #[error("not homogeneous of degree 4 in x, y, z")]
    NotQuartic,
    #[error("the quartic uses the reserved variable `{0}`")]
    ReservedVariable(String),
    #[error("substitution and closed formula disagree for b{0}")]
    Inconsistent(usize),
    #[error("covariant division failed: {0}")]
    Division(PolyError),
    #[error("the point lies on the dual curve (G = 0)")]
    OnDualCurve,
    #[error("g4 and g6 both vanish at the point; j is undefined")]
    Indeterminate,
    #[error("the four points are not pairwise distinct")]
    DegenerateQuadruple,
    #[error("covariants have parameters; evaluate them first")]
    Symbolic,
}

/// Homogeneous quartic in x, y, z; coefficients may involve parameter variables.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticCurve {
    poly: Poly,
}

impl QuarticCurve {
    pub fn new(poly: Poly) -> Result<Self, CovariantError> {
        if let Some(v) = poly.used_variables().iter().find(|v| RESERVED.contains(v)) {
            return Err(CovariantError::ReservedVariable(v.to_string()));
        }
        let weights: Vec<(&str, u32)> = PLANE.iter().map(|v| (*v, 1)).collect();
        if poly.weighted_degree(&weights) != Some(4) {
            return Err(CovariantError::NotQuartic);
        }
        Ok(QuarticCurve { poly: poly.with_scope(&PLANE) })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Coefficient `a_ijk` of `x^i y^j z^k`, a polynomial in the parameters.
    pub fn a(&self, i: u32, j: u32, k: u32) -> Poly {
        self.poly.coefficient_of(&[("x", i), ("y", j), ("z", k)])
    }

    /// Parameters other than x, y, z.
    pub fn parameters(&self) -> Vec<String> {
        self.poly.used_variables().into_iter().filter(|v| !PLANE.contains(v)).map(String::from).collect()
    }
}

/// Coefficients of `H(ux, uy, -(sx+ty)) = Σ b_{4-r} x^r y^{4-r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineRestriction {
    pub b: [Poly; 5],
}

#[derive(Debug, Clone, PartialEq)]
pub struct CovariantPair {
    pub g4: Poly,
    pub g6: Poly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualCurve {
    pub g: Poly,
}

fn v(name: &str) -> Poly {
    Poly::var(name)
}

/// The line restriction by direct substitution.
pub fn line_restriction_substitution(c: &QuarticCurve) -> LineRestriction {
    let (s, t, u, x, y) = (v("s"), v("t"), v("u"), v("x"), v("y"));
    let restricted = c.poly.substitute(&[
        ("x", &u * &x),
        ("y", &u * &y),
        ("z", -(&s * &x + &t * &y)),
    ]);
    let b = std::array::from_fn(|r| restricted.coefficient_of(&[("x", 4 - r as u32), ("y", r as u32)]));
    LineRestriction { b }
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// The line restriction by the closed binomial formula
/// `b_r = Σ_{j≤r} Σ_{i+k=4-j} (-1)^k a_ijk C(k, k+j-r) s^(k+j-r) t^(r-j) u^(4-k)`.
pub fn line_restriction_closed_form(c: &QuarticCurve) -> LineRestriction {
    let (s, t, u) = (v("s"), v("t"), v("u"));
    let b = std::array::from_fn(|r| {
        let r = r as u32;
        let mut acc = Poly::zero();
        for j in 0..=r {
            for k in 0..=(4 - j) {
                let i = 4 - j - k;
                if k + j < r {
                    continue;
                }
                let coeff = binomial(k, k + j - r);
                if coeff == 0 {
                    continue;
                }
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let term = c.a(i, j, k).scale(&int(sign * coeff))
                    * s.pow(k + j - r)
                    * t.pow(r - j)
                    * u.pow(4 - k);
                acc = acc + term;
            }
        }
        acc
    });
    LineRestriction { b }
}

/// Line restriction computed both ways; the two must agree.
pub fn line_restriction(c: &QuarticCurve) -> Result<LineRestriction, CovariantError> {
    let a = line_restriction_substitution(c);
    let b = line_restriction_closed_form(c);
    if let Some(r) = (0..5).find(|&r| a.b[r] != b.b[r]) {
        return Err(CovariantError::Inconsistent(r));
    }
    Ok(a)
}

/// `h2 = (1/3)(-3 b1 b3 + 12 b0 b4 + b2^2)` and
/// `h3 = (1/27)(72 b0 b2 b4 - 27 b0 b3^2 - 27 b1^2 b4 + 9 b1 b2 b3 - 2 b2^3)`.
pub fn binary_invariants(b: &[Poly; 5]) -> (Poly, Poly) {
    let [b0, b1, b2, b3, b4] = b;
    let h2 = (b1 * b3).scale(&int(-3)) + (b0 * b4).scale(&int(12)) + b2 * b2;
    let h3 = (b0 * b2 * b4).scale(&int(72)) - (b0 * b3 * b3).scale(&int(27)) - (b1 * b1 * b4).scale(&int(27))
        + (b1 * b2 * b3).scale(&int(9))
        - (b2 * b2 * b2).scale(&int(2));
    (h2.scale(&rat(1, 3)), h3.scale(&rat(1, 27)))
}

/// Same invariants for a binary quartic with rational coefficients.
pub fn binary_invariants_rational(b: &[Rational; 5]) -> (Rational, Rational) {
    let [b0, b1, b2, b3, b4] = b;
    let h2 = (-int(3) * b1 * b3 + int(12) * b0 * b4 + b2 * b2) / int(3);
    let h3 = (int(72) * b0 * b2 * b4 - int(27) * b0 * b3 * b3 - int(27) * b1 * b1 * b4 + int(9) * b1 * b2 * b3
        - int(2) * b2 * b2 * b2)
        / int(27);
    (h2, h3)
}

/// `g4`, `g6` with `u^4 g4 = h2(b)` and `u^6 g6 = h3(b)`.
pub fn covariants(c: &QuarticCurve) -> Result<CovariantPair, CovariantError> {
    let lr = line_restriction(c)?;
    covariants_from_restriction(&lr)
}

pub fn covariants_from_restriction(lr: &LineRestriction) -> Result<CovariantPair, CovariantError> {
    let (h2, h3) = binary_invariants(&lr.b);
    let u = v("u");
    let g4 = h2.exact_divide(&u.pow(4)).map_err(CovariantError::Division)?;
    let g6 = h3.exact_divide(&u.pow(6)).map_err(CovariantError::Division)?;
    Ok(CovariantPair { g4: g4.trimmed(), g6: g6.trimmed() })
}

/// `G = 4 g4^3 - 27 g6^2`.
pub fn dual_curve(cp: &CovariantPair) -> DualCurve {
    DualCurve { g: (cp.g4.pow(3).scale(&int(4)) - cp.g6.pow(2).scale(&int(27))).trimmed() }
}

impl CovariantPair {
    /// `(g4(p), g6(p))` at a rational point of the dual plane.
    pub fn values_at(&self, p: &[Rational]) -> Result<(Rational, Rational), CovariantError> {
        let binding: Vec<(&str, Rational)> = DUAL.iter().copied().zip(p.iter().cloned()).collect();
        let g4 = self.g4.eval_at(&binding).ok_or(CovariantError::Symbolic)?;
        let g6 = self.g6.eval_at(&binding).ok_or(CovariantError::Symbolic)?;
        Ok((g4, g6))
    }

    /// Specializes parameter variables.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> CovariantPair {
        CovariantPair { g4: self.g4.evaluate(values).trimmed(), g6: self.g6.evaluate(values).trimmed() }
    }
}

/// `j = 1728 * 4 i^3 / (4 i^3 - 27 k^2)` for invariants of weight 2 and 3.
pub fn j_from_invariants(i: &Rational, k: &Rational) -> Result<Rational, CovariantError> {
    let four_i3 = int(4) * i * i * i;
    let denom = &four_i3 - int(27) * k * k;
    if denom.is_zero() {
        return Err(if i.is_zero() { CovariantError::Indeterminate } else { CovariantError::OnDualCurve });
    }
    Ok(int(1728) * four_i3 / denom)
}

/// j-value of the line with dual coordinates `p`.
pub fn j_eval(cp: &CovariantPair, p: &PointSource) -> Result<Rational, CovariantError> {
    j_eval_coords(cp, &p.coordinates)
}

pub fn j_eval_coords(cp: &CovariantPair, p: &[Rational]) -> Result<Rational, CovariantError> {
    let (g4, g6) = cp.values_at(p)?;
    j_from_invariants(&g4, &g6)
}

/// j of a binary quartic `Σ b_{4-r} x^r y^{4-r}` through its invariants.
pub fn j_of_binary_quartic(b: &[Rational; 5]) -> Result<Rational, CovariantError> {
    let (h2, h3) = binary_invariants_rational(b);
    j_from_invariants(&h2, &h3)
}

/// Cross-ratio `(x1-x3)(x4-x2) / ((x1-x2)(x4-x3))`.
pub fn cross_ratio(x: &[Rational; 4]) -> Result<Rational, CovariantError> {
    let [x1, x2, x3, x4] = x;
    let den = (x1 - x2) * (x4 - x3);
    if den.is_zero() {
        return Err(CovariantError::DegenerateQuadruple);
    }
    Ok((x1 - x3) * (x4 - x2) / den)
}

/// `j(λ) = 256 (1 - λ(1-λ))^3 / (λ^2 (1-λ)^2)`.
pub fn j_from_cross_ratio(lambda: &Rational) -> Result<Rational, CovariantError> {
    let one = Rational::one();
    let m = &one - lambda;
    let den = lambda * lambda * &m * &m;
    if den.is_zero() {
        return Err(CovariantError::DegenerateQuadruple);
    }
    let num = &one - lambda * &m;
    Ok(int(256) * &num * &num * &num / den)
}

/// j of four distinct points of the affine line.
pub fn j_from_roots(x: &[Rational; 4]) -> Result<Rational, CovariantError> {
    for i in 0..4 {
        for k in i + 1..4 {
            if x[i] == x[k] {
                return Err(CovariantError::DegenerateQuadruple);
            }
        }
    }
    j_from_cross_ratio(&cross_ratio(x)?)
}
