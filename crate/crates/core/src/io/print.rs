use num_traits::{One, Signed};

use crate::poly::{Poly, Rational};

/// Canonical text: terms in descending graded-lex order, `" + "`/`" - "`
/// separators, unit coefficients dropped, `"0"` for the zero polynomial.
pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let vars: Vec<String> = p
            .named_exponents(m)
            .into_iter()
            .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if vars.is_empty() {
            out.push_str(&print_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&print_rational(&abs));
                out.push('*');
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

/// `"n"` for integers, `"n/d"` otherwise.
pub fn print_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
