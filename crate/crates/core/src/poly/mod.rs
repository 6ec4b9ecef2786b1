//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] carries its own variable scope (a sorted list of names) and a
//! map from exponent vectors to nonzero coefficients kept in graded
//! lexicographic order. Arithmetic between polynomials with different scopes
//! works over the union of the scopes. Parameters such as `lambda` or the
//! coefficients `a310` of a generic quartic are ordinary variables.

mod linalg;
mod matrix;
mod monomial;
pub mod rational;
mod resultant;
mod square;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

pub use linalg::RatMatrix;
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use rational::Rational;
pub use resultant::{
    macaulay_resultant_ternary, macaulay_resultant_ternary_with_rng, resultant_bivariate,
    univariate_gcd, univariate_rational_roots, univariate_squarefree_part,
};
pub use square::{is_perfect_square, square_up_to_constant};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("variable `{0}` is not in scope")]
    UnknownVariable(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: Poly },
    #[error("`{var}` has degree zero in an argument of the resultant")]
    DegreeZero { var: String },
    #[error("input is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("Macaulay minor stayed singular after {0} coordinate changes")]
    MacaulayDegenerate(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected a polynomial in the single variable `{0}`")]
    NotUnivariate(String),
}

#[derive(Clone)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

fn empty_scope() -> Arc<[String]> {
    Arc::from(Vec::<String>::new())
}

fn union_scope(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
    if Arc::ptr_eq(a, b) || a[..] == b[..] {
        return a.clone();
    }
    let mut all: Vec<String> = a.iter().chain(b.iter()).cloned().collect();
    all.sort();
    all.dedup();
    Arc::from(all)
}

impl Poly {
    pub fn zero() -> Self {
        Poly { vars: empty_scope(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(0), c);
        }
        Poly { vars: empty_scope(), terms }
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(rational::int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        Poly { vars: Arc::from(vec![name.to_string()]), terms }
    }

    /// Builds a polynomial from `(exponents by name, coefficient)` pairs.
    pub fn from_terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<(&'a str, u32)>, Rational)>,
    {
        terms.into_iter().fold(Poly::zero(), |acc, (exps, c)| {
            let mut t = Poly::constant(c);
            for (v, e) in exps {
                t = &t * &Poly::var(v).pow(e);
            }
            acc + t
        })
    }

    /// Same polynomial with `names` added to the scope.
    pub fn with_scope<S: AsRef<str>>(&self, names: &[S]) -> Poly {
        let mut all: Vec<String> = self.vars.iter().cloned().collect();
        all.extend(names.iter().map(|s| s.as_ref().to_string()));
        all.sort();
        all.dedup();
        self.embed(&Arc::from(all))
    }

    fn embed(&self, vars: &Arc<[String]>) -> Poly {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Poly { vars: vars.clone(), terms: self.terms.clone() };
        }
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("scope must contain the variable"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; vars.len()];
                for (i, &p) in positions.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Poly { vars: vars.clone(), terms }
    }

    fn from_map(vars: Arc<[String]>, terms: BTreeMap<Monomial, Rational>) -> Poly {
        Poly { vars, terms }
    }

    pub fn scope(&self) -> &[String] {
        &self.vars
    }

    /// Variables that occur with a positive exponent in some term.
    pub fn used_variables(&self) -> Vec<&str> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.as_str())
            .collect()
    }

    fn index_of(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    /// Exponents of a monomial of this polynomial, by name, zeros omitted.
    pub fn named_exponents<'a>(&'a self, m: &Monomial) -> Vec<(&'a str, u32)> {
        self.vars
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v.as_str(), u32::from(e)))
            .collect()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.index_of(var) {
            Some(i) => self.terms.keys().map(|m| u32::from(m.0[i])).max().unwrap_or(0),
            None => 0,
        }
    }

    fn weight_vector(&self, weights: &[(&str, u32)]) -> Vec<u32> {
        self.vars
            .iter()
            .map(|v| weights.iter().find(|(w, _)| w == v).map(|&(_, k)| k).unwrap_or(0))
            .collect()
    }

    /// The common weighted degree of all terms, or `None` when the polynomial
    /// is zero or not weighted-homogeneous. Variables not listed have weight 0.
    pub fn weighted_degree(&self, weights: &[(&str, u32)]) -> Option<u32> {
        let w = self.weight_vector(weights);
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(&w));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Homogeneity in the listed variables (each of weight 1).
    pub fn is_homogeneous_in(&self, vars: &[&str], degree: u32) -> bool {
        let weights: Vec<(&str, u32)> = vars.iter().map(|v| (*v, 1)).collect();
        self.is_zero() || self.weighted_degree(&weights) == Some(degree)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Poly::from_map(self.vars.clone(), terms)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one().embed(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Poly, PolyError> {
        let i = self.index_of(var).ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            terms.insert(m2, c * rational::int(i64::from(e)));
        }
        Ok(Poly::from_map(self.vars.clone(), terms))
    }

    /// Simultaneous substitution `var -> image`. Variables without a binding
    /// are left alone; bindings for variables outside the scope are ignored.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Poly {
        let images: Vec<Poly> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .iter()
                    .find(|(name, _)| name == v)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| Poly::var(v))
            })
            .collect();
        let mut scope = empty_scope();
        for img in &images {
            scope = union_scope(&scope, &img.vars);
        }
        let images: Vec<Poly> = images.iter().map(|p| p.embed(&scope)).collect();
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one().embed(&scope), p.clone()]).collect();
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone()).embed(&scope);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= usize::from(e) {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[usize::from(e)];
            }
            for (tm, tc) in t.terms {
                add_term(&mut acc, tm, tc);
            }
        }
        Poly::from_map(scope, acc)
    }

    /// Substitutes rational values for some variables.
    pub fn evaluate(&self, values: &[(&str, Rational)]) -> Poly {
        let bindings: Vec<(&str, Poly)> =
            values.iter().map(|(v, q)| (*v, Poly::constant(q.clone()))).collect();
        self.substitute(&bindings)
    }

    /// Evaluates at a point given in scope-name order; every used variable must be bound.
    pub fn eval_at(&self, values: &[(&str, Rational)]) -> Option<Rational> {
        self.evaluate(values).as_constant()
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coefficient(&self, var: &str, k: u32) -> Poly {
        let Some(i) = self.index_of(var) else {
            return if k == 0 { self.clone() } else { Poly::zero() };
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if u32::from(m.0[i]) == k {
                let mut m2 = m.clone();
                m2.0[i] = 0;
                terms.insert(m2, c.clone());
            }
        }
        Poly::from_map(self.vars.clone(), terms)
    }

    /// Coefficient of the monomial `Π vars[i]^exps[i]`, in the other variables.
    pub fn coefficient_of(&self, exps: &[(&str, u32)]) -> Poly {
        exps.iter().fold(self.clone(), |p, (v, k)| p.coefficient(v, *k))
    }

    /// Long division by a single divisor (graded lex term rewriting).
    /// Returns `(q, r)` with `self = q*d + r` and no term of `r` divisible
    /// by the leading monomial of `d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), PolyError> {
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let scope = union_scope(&self.vars, &d.vars);
        let d = d.embed(&scope);
        let mut p = self.embed(&scope).terms;
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut q = BTreeMap::new();
        let mut r = BTreeMap::new();
        while let Some((m, c)) = p.pop_last() {
            if dm.divides(&m) {
                let qm = dm.quotient_of(&m);
                let qc = &c / &dc;
                for (tm, tc) in d.terms.iter() {
                    if tm == &dm {
                        continue;
                    }
                    add_term(&mut p, qm.mul(tm), -(&qc * tc));
                }
                q.insert(qm, qc);
            } else {
                r.insert(m, c);
            }
        }
        Ok((Poly::from_map(scope.clone(), q), Poly::from_map(scope, r)))
    }

    /// Exact quotient `self / d`; fails with the remainder as witness.
    pub fn exact_divide(&self, d: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible { remainder: r })
        }
    }

    /// Coefficients in `var` from degree 0 upward, with `var` kept in scope.
    pub fn coefficients_in(&self, var: &str) -> Vec<Poly> {
        (0..=self.degree_in(var)).map(|k| self.coefficient(var, k)).collect()
    }

    /// Drops scope variables that do not occur.
    pub fn trimmed(&self) -> Poly {
        let used: Vec<String> = self.used_variables().into_iter().map(String::from).collect();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let keep: Vec<usize> = used.iter().map(|v| self.index_of(v).unwrap()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone()))
            .collect();
        Poly::from_map(Arc::from(used), terms)
    }

    /// Homogenizes with respect to `vars` (weights 1) up to `degree`
    /// using the new variable `h`.
    pub fn homogenize(&self, vars: &[&str], h: &str, degree: u32) -> Poly {
        let scoped = self.with_scope(&[h]);
        let hi = scoped.index_of(h).unwrap();
        let idx: Vec<usize> = vars.iter().filter_map(|v| scoped.index_of(v)).collect();
        let mut sorted = BTreeMap::new();
        for (m, c) in &scoped.terms {
            let d: u32 = idx.iter().map(|&i| u32::from(m.0[i])).sum();
            let mut m2 = m.clone();
            m2.0[hi] += (degree - d) as u16;
            add_term(&mut sorted, m2, c.clone());
        }
        Poly::from_map(scoped.vars.clone(), sorted)
    }
}

fn add_term(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars[..] == other.vars[..] {
            return self.terms == other.terms;
        }
        let scope = union_scope(&self.vars, &other.vars);
        self.embed(&scope).terms == other.embed(&scope).terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::print_poly(self))
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let scope = union_scope(&self.vars, &rhs.vars);
        let mut terms = self.embed(&scope).terms;
        for (m, c) in rhs.embed(&scope).terms {
            add_term(&mut terms, m, c);
        }
        Poly::from_map(scope, terms)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let scope = union_scope(&self.vars, &rhs.vars);
        let mut terms = self.embed(&scope).terms;
        for (m, c) in rhs.embed(&scope).terms {
            add_term(&mut terms, m, -c);
        }
        Poly::from_map(scope, terms)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let scope = union_scope(&self.vars, &rhs.vars);
        let a = self.embed(&scope);
        let b = rhs.embed(&scope);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Poly::from_map(scope, terms)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Poly::from_map(self.vars.clone(), terms)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| a * b)
    }
}
