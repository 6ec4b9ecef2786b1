//! The double Veronese cone `F = -w^2 + v^3 - g4 v + g6` in P(1,1,1,2,3),
//! singular points and their lifts from the dual curve, node certificates,
//! the Plücker ledger and the S4-symmetric family of quartics.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::covariants::{covariants, dual_curve, CovariantError, CovariantPair, QuarticCurve, DUAL};
use crate::poly::rational::{cbrt_exact, int, rat, sqrt_exact};
use crate::poly::{Poly, RatMatrix, Rational};

pub const CONE_VARS: [&str; 5] = ["s", "t", "u", "v", "w"];
pub const CONE_WEIGHTS: [u32; 5] = [1, 1, 1, 2, 3];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConeError {
    #[error("the zero vector is not a point")]
    ZeroPoint,
    #[error("the point is not a singular point of the dual curve")]
    NotDualSingular,
    #[error("the dual point fits neither branch of the correspondence")]
    Unclassifiable,
    #[error("the lifted point failed the singularity check")]
    LiftNotSingular,
    #[error("the point is not a singular point of the cone")]
    NotSingular,
    #[error("s = t = u = 0 at the point; no weight-one chart")]
    NoUnitChart,
    #[error("delta_s = {0} exceeds 12; iota would be negative")]
    PluckerInfeasible(u32),
    #[error("lambda = {0} is excluded; it must be different from -2, 2 and -1")]
    ExcludedLambda(String),
    #[error("the cone has parameters; evaluate them first")]
    Symbolic,
    #[error(transparent)]
    Covariant(#[from] CovariantError),
}

fn var(name: &str) -> Poly {
    Poly::var(name)
}

/// `F(s,t,u,v,w) = -w^2 + v^3 - g4 v + g6`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeEquation {
    pub f: Poly,
    pub covariants: CovariantPair,
}

pub fn cone_equation(cp: &CovariantPair) -> ConeEquation {
    let (v, w) = (var("v"), var("w"));
    let f = -w.pow(2) + v.pow(3) - &cp.g4 * &v + &cp.g6;
    ConeEquation { f: f.with_scope(&CONE_VARS), covariants: cp.clone() }
}

impl ConeEquation {
    /// `s F_s + t F_t + u F_u + 2 v F_v + 3 w F_w - 6 F`, zero for a valid cone.
    pub fn euler_defect(&self) -> Poly {
        let mut acc = self.f.scale(&int(-6));
        for (name, wt) in CONE_VARS.iter().zip(CONE_WEIGHTS) {
            let d = self.f.partial_derivative(name).expect("cone variables are in scope");
            acc = acc + (var(name) * d).scale(&int(i64::from(wt)));
        }
        acc
    }

    pub fn satisfies_euler(&self) -> bool {
        self.euler_defect().is_zero()
    }

    pub fn gradient(&self) -> [Poly; 5] {
        std::array::from_fn(|i| self.f.partial_derivative(CONE_VARS[i]).expect("in scope"))
    }

    fn eval(&self, p: &Poly, pt: &WeightedPoint) -> Result<Rational, ConeError> {
        p.eval_at(&pt.bindings()).ok_or(ConeError::Symbolic)
    }

    pub fn contains(&self, p: &WeightedPoint) -> Result<bool, ConeError> {
        Ok(self.eval(&self.f, p)?.is_zero())
    }
}

/// A point of P(1,1,1,2,3) with rational coordinates `(s, t, u, v, w)`.
#[derive(Debug, Clone)]
pub struct WeightedPoint {
    coords: [Rational; 5],
}

impl WeightedPoint {
    pub fn new(coords: [Rational; 5]) -> Result<Self, ConeError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(ConeError::ZeroPoint);
        }
        Ok(WeightedPoint { coords })
    }

    pub fn from_slice(c: &[Rational]) -> Result<Self, ConeError> {
        let arr: [Rational; 5] = c.to_vec().try_into().map_err(|_| ConeError::ZeroPoint)?;
        WeightedPoint::new(arr)
    }

    pub fn coords(&self) -> &[Rational; 5] {
        &self.coords
    }

    fn bindings(&self) -> Vec<(&'static str, Rational)> {
        CONE_VARS.iter().copied().zip(self.coords.iter().cloned()).collect()
    }

    /// `(μ s, μ t, μ u, μ^2 v, μ^3 w)`.
    pub fn scaled(&self, mu: &Rational) -> WeightedPoint {
        let coords = std::array::from_fn(|i| &self.coords[i] * mu.pow(CONE_WEIGHTS[i] as i32));
        WeightedPoint { coords }
    }

    /// Representative with the first nonzero weight-one coordinate equal to 1,
    /// if there is one.
    pub fn normalized(&self) -> WeightedPoint {
        match self.coords[..3].iter().find(|c| !c.is_zero()) {
            Some(c) => self.scaled(&c.recip()),
            None => self.clone(),
        }
    }

    /// Rational `μ` with `other = self.scaled(μ)`, if one exists.
    pub fn scaling_to(&self, other: &WeightedPoint) -> Option<Rational> {
        let (a, b) = (&self.coords, &other.coords);
        let candidates: Vec<Rational> = if let Some(i) = (0..3).find(|&i| !a[i].is_zero()) {
            vec![&b[i] / &a[i]]
        } else if !a[3].is_zero() && !a[4].is_zero() {
            if b[3].is_zero() {
                return None;
            }
            vec![(&b[4] * &a[3]) / (&a[4] * &b[3])]
        } else if !a[3].is_zero() {
            let r = sqrt_exact(&(&b[3] / &a[3]))?;
            vec![r.clone(), -r]
        } else {
            vec![cbrt_exact(&(&b[4] / &a[4]))?]
        };
        candidates.into_iter().find(|mu| !mu.is_zero() && self.scaled(mu).coords == *b)
    }
}

impl PartialEq for WeightedPoint {
    fn eq(&self, other: &Self) -> bool {
        self.scaling_to(other).is_some()
    }
}

/// True iff `F(p) = 0` and all five partial derivatives vanish at `p`.
pub fn is_singular_point(cone: &ConeEquation, p: &WeightedPoint) -> Result<bool, ConeError> {
    if !cone.contains(p)? {
        return Ok(false);
    }
    for d in cone.gradient() {
        if !cone.eval(&d, p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `g4(q) != 0`; lift `[q : 3 g6 / (2 g4) : 0]`.
    Ordinary,
    /// `g4(q) = g6(q) = 0` and `g6` singular at `q`; lift `[q : 0 : 0]`.
    VSection,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lift {
    pub branch: Branch,
    pub point: WeightedPoint,
    pub g4: Rational,
    pub g6: Rational,
}

fn eval_dual(p: &Poly, q: &[Rational]) -> Result<Rational, ConeError> {
    let b: Vec<(&str, Rational)> = DUAL.iter().copied().zip(q.iter().cloned()).collect();
    p.eval_at(&b).ok_or(ConeError::Symbolic)
}

fn gradient_vanishes(p: &Poly, q: &[Rational]) -> Result<bool, ConeError> {
    let p = p.with_scope(&DUAL);
    for name in DUAL {
        if !eval_dual(&p.partial_derivative(name).expect("in scope"), q)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lifts a singular point of the dual curve to a singular point of the cone.
pub fn classify_and_lift(cp: &CovariantPair, q: &[Rational]) -> Result<Lift, ConeError> {
    if q.len() != 3 || q.iter().all(Zero::is_zero) {
        return Err(ConeError::ZeroPoint);
    }
    let g = dual_curve(cp).g;
    if !eval_dual(&g, q)?.is_zero() || !gradient_vanishes(&g, q)? {
        return Err(ConeError::NotDualSingular);
    }
    let g4 = eval_dual(&cp.g4, q)?;
    let g6 = eval_dual(&cp.g6, q)?;
    let (branch, v) = if !g4.is_zero() {
        (Branch::Ordinary, int(3) * &g6 / (int(2) * &g4))
    } else if g6.is_zero() && gradient_vanishes(&cp.g6, q)? {
        (Branch::VSection, Rational::zero())
    } else {
        return Err(ConeError::Unclassifiable);
    };
    let point = WeightedPoint::new([q[0].clone(), q[1].clone(), q[2].clone(), v, Rational::zero()])?;
    if !is_singular_point(&cone_equation(cp), &point)? {
        return Err(ConeError::LiftNotSingular);
    }
    Ok(Lift { branch, point, g4, g6 })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NodeCertificate {
    /// Weight-one coordinate set to 1.
    pub chart: &'static str,
    /// Affine coordinates of the point in the chart, in the order of `variables`.
    pub point: Vec<Rational>,
    pub variables: Vec<&'static str>,
    pub hessian: RatMatrix,
    pub determinant: Rational,
}

impl NodeCertificate {
    pub fn is_node(&self) -> bool {
        !self.determinant.is_zero()
    }
}

/// Hessian of the affine equation in a weight-one chart at a singular point.
pub fn node_certificate(cone: &ConeEquation, p: &WeightedPoint) -> Result<NodeCertificate, ConeError> {
    if !is_singular_point(cone, p)? {
        return Err(ConeError::NotSingular);
    }
    let c = (0..3).find(|&i| !p.coords[i].is_zero()).ok_or(ConeError::NoUnitChart)?;
    let chart = CONE_VARS[c];
    let local = p.scaled(&p.coords[c].recip());
    let f = cone.f.evaluate(&[(chart, Rational::one())]);
    let variables: Vec<&'static str> = CONE_VARS.iter().copied().filter(|v| *v != chart).collect();
    let point: Vec<Rational> = (0..5).filter(|&i| i != c).map(|i| local.coords[i].clone()).collect();
    let at: Vec<(&str, Rational)> = variables.iter().copied().zip(point.iter().cloned()).collect();
    let f = f.with_scope(&variables);
    let firsts: Vec<Poly> = variables.iter().map(|v| f.partial_derivative(v).expect("in scope")).collect();
    let mut hessian = RatMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            let d = firsts[i].with_scope(&variables).partial_derivative(variables[j]).expect("in scope");
            hessian[(i, j)] = d.eval_at(&at).ok_or(ConeError::Symbolic)?;
        }
    }
    let determinant = hessian.det();
    Ok(NodeCertificate { chart, point, variables, hessian, determinant })
}

/// Bitangent, hyperflex and flex counts of a smooth plane quartic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PluckerCounts {
    pub delta_o: u32,
    pub delta_s: u32,
    pub iota: u32,
}

impl PluckerCounts {
    /// Number of singular points of the dual curve, `δo + δs + ι = 52 - 2δs`.
    pub fn dual_singular_points(&self) -> u32 {
        self.delta_o + self.delta_s + self.iota
    }

    /// Singular points of the cone: `δo` ordinary lifts plus `δs` on `v = 0`.
    pub fn cone_nodes(&self) -> u32 {
        self.delta_o + self.delta_s
    }
}

pub fn plucker_ledger(delta_s: u32) -> Result<PluckerCounts, ConeError> {
    if delta_s > 12 {
        return Err(ConeError::PluckerInfeasible(delta_s));
    }
    Ok(PluckerCounts { delta_o: 28 - delta_s, delta_s, iota: 24 - 2 * delta_s })
}

/// The parameter of the family `x^4 + y^4 + z^4 + λ(y^2 z^2 + x^2 z^2 + x^2 y^2)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Lambda {
    Value(Rational),
    Symbolic,
}

impl Lambda {
    pub fn as_poly(&self) -> Poly {
        match self {
            Lambda::Value(q) => Poly::constant(q.clone()),
            Lambda::Symbolic => var("lambda"),
        }
    }
}

/// The S4-symmetric quartic with parameter `λ` (a variable named `lambda` when symbolic).
pub fn s4_quartic(lambda: &Lambda) -> Poly {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    let sym = y.pow(2) * z.pow(2) + x.pow(2) * z.pow(2) + x.pow(2) * y.pow(2);
    x.pow(4) + y.pow(4) + z.pow(4) + lambda.as_poly() * sym
}

#[derive(Debug, Clone, PartialEq)]
pub struct S4Planes {
    pub gamma: Rational,
    /// `(v - μq, w - γ stu)` and `(v - μq, w + γ stu)`.
    pub plus: (Poly, Poly),
    pub minus: (Poly, Poly),
    /// F vanishes identically on both planes.
    pub planes_on_cone: bool,
    /// The quartic W in P(1,1,1,1,2) with coordinates s, t, u, r, v.
    pub w_quartic: Poly,
    /// W agrees with `A - r(r v̄ + 2γ stu)` and `F(w = r v̄ + γ stu) = v̄ W`.
    pub w_matches: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct S4FamilyData {
    pub lambda: Lambda,
    pub mu: Poly,
    pub covariants: CovariantPair,
    pub cone: ConeEquation,
    /// `μ^3 q^3 - μ q g4 + g6 - 4(λ-2)^2(λ+1) s^2 t^2 u^2`, zero when the identity holds.
    pub identity_defect: Poly,
    /// Present when `λ + 1` is the square of a rational.
    pub planes: Option<S4Planes>,
    /// `(4 g4 - 3 μ^2 q^2) / 16`.
    pub branch_quartic: Poly,
    pub branch_matches: bool,
    /// For `λ = 0`: whether the cone equals the cone of the Fermat quartic.
    pub fermat_consistent: Option<bool>,
}

impl S4FamilyData {
    pub fn identity_holds(&self) -> bool {
        self.identity_defect.is_zero()
    }
}

pub fn s4_family(lambda: Lambda) -> Result<S4FamilyData, ConeError> {
    if let Lambda::Value(l) = &lambda {
        if [int(-2), int(2), int(-1)].contains(l) {
            return Err(ConeError::ExcludedLambda(crate::io::print_rational(l)));
        }
    }
    let curve = QuarticCurve::new(s4_quartic(&lambda))?;
    let cp = covariants(&curve)?;
    let cone = cone_equation(&cp);
    let l = lambda.as_poly();
    let mu = l.scale(&rat(2, 3));
    let (s, t, u, v, w, r) = (var("s"), var("t"), var("u"), var("v"), var("w"), var("r"));
    let q = s.pow(2) + t.pow(2) + u.pow(2);
    let stu = &s * &t * &u;
    let s2t2u2 = stu.pow(2);

    let lhs = mu.pow(3) * q.pow(3) - &mu * &q * &cp.g4 + &cp.g6;
    let rhs = (&l - Poly::int(2)).pow(2) * (&l + Poly::int(1)) * &s2t2u2;
    let identity_defect = (lhs - rhs.scale(&int(4))).trimmed();

    let branch_quartic = (cp.g4.scale(&int(4)) - (mu.pow(2) * q.pow(2)).scale(&int(3))).scale(&rat(1, 16));
    let expected_branch = s.pow(4) + t.pow(4) + u.pow(4) + &l * (t.pow(2) * u.pow(2) + s.pow(2) * u.pow(2) + s.pow(2) * t.pow(2));
    let branch_matches = branch_quartic == expected_branch;

    let planes = match &lambda {
        Lambda::Value(lv) => sqrt_exact(&(lv + Rational::one())).map(|root| {
            let gamma = int(2) * (lv - int(2)) * root;
            let g = Poly::constant(gamma.clone());
            let v_plane = &v - &mu * &q;
            let on_plane = |sign: i64| {
                cone.f
                    .substitute(&[("v", &mu * &q), ("w", (&g * &stu).scale(&int(sign)))])
                    .is_zero()
            };
            let planes_on_cone = on_plane(1) && on_plane(-1);
            let vbar = v_plane.clone();
            let a = vbar.pow(2) + (&vbar * &q * &mu).scale(&int(3)) + (mu.pow(2) * q.pow(2)).scale(&int(3)) - &cp.g4;
            let w_quartic = v.pow(2) + &v * (&mu * &q - r.pow(2)) + mu.pow(2) * q.pow(2) - &cp.g4 + &mu * r.pow(2) * &q
                - (&g * &r * &stu).scale(&int(2));
            let derived = &a - &r * (&r * &vbar + (&g * &stu).scale(&int(2)));
            let lifted = cone.f.substitute(&[("w", &r * &vbar + &g * &stu)]);
            let w_matches = w_quartic == derived && lifted == &vbar * &w_quartic;
            S4Planes {
                gamma,
                plus: (v_plane.clone(), &w - &g * &stu),
                minus: (v_plane, &w + &g * &stu),
                planes_on_cone,
                w_quartic,
                w_matches,
            }
        }),
        Lambda::Symbolic => None,
    };

    let fermat_consistent = match &lambda {
        Lambda::Value(lv) if lv.is_zero() => {
            let fermat = QuarticCurve::new(var("x").pow(4) + var("y").pow(4) + var("z").pow(4))?;
            Some(cone_equation(&covariants(&fermat)?).f == cone.f)
        }
        _ => None,
    };

    Ok(S4FamilyData {
        lambda,
        mu,
        covariants: cp,
        cone,
        identity_defect,
        planes,
        branch_quartic,
        branch_matches,
        fermat_consistent,
    })
}
