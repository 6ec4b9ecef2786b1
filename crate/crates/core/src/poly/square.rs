use num_traits::{Signed, Zero};

use super::rational::sqrt_exact;
use super::{Poly, Rational};

/// Returns `q` with `q^2 = p` (leading coefficient of `q` positive), or `None`.
///
/// The square root is built term by term from the top: with `q_k` the partial
/// root, the leading term of `p - q_k^2` must be `2 * lead(q) * t` for the next
/// term `t`. The final remainder is checked to be zero.
pub fn is_perfect_square(p: &Poly) -> Option<Poly> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let (lm, lc) = p.leading_term()?;
    let root_m = lm.sqrt()?;
    let root_c = sqrt_exact(lc)?;
    let lead = single_term(p, root_m.exponents(), root_c);
    let two_lead = lead.scale(&Rational::from_integer(2.into()));
    let mut q = lead.clone();
    let mut last = lead;
    loop {
        let r = p - &(&q * &q);
        if r.is_zero() {
            return Some(q);
        }
        let (t, rem) = r.leading_term_poly().div_rem(&two_lead).ok()?;
        if !rem.is_zero() || t.is_zero() {
            return None;
        }
        // terms of the root strictly decrease
        if t.leading_term().unwrap().0 >= last.leading_term().unwrap().0 {
            return None;
        }
        q = &q + &t;
        last = t;
    }
}

/// Writes `p = c * q^2` with `c` the leading coefficient of `p`, if possible.
pub fn square_up_to_constant(p: &Poly) -> Option<(Rational, Poly)> {
    if p.is_zero() {
        return Some((Rational::zero(), Poly::zero()));
    }
    let c = p.leading_term()?.1.clone();
    let q = is_perfect_square(&p.scale(&c.recip()))?;
    debug_assert!(!q.leading_term().unwrap().1.is_negative());
    Some((c, q))
}

fn single_term(p: &Poly, exps: &[u16], c: Rational) -> Poly {
    let named: Vec<(&str, u32)> = p
        .scope()
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| (v.as_str(), u32::from(e)))
        .collect();
    Poly::from_terms([(named, c)]).with_scope(p.scope())
}

impl Poly {
    fn leading_term_poly(&self) -> Poly {
        match self.leading_term() {
            Some((m, c)) => single_term(self, m.exponents(), c.clone()),
            None => Poly::zero(),
        }
    }
}
