//! Exact rationals.
//!
//! `BigRational` already keeps every value in lowest terms with a positive
//! denominator, which is exactly the invariant the rest of the crate relies on.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use num_rational::BigRational as Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a square.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Exact cube root of a rational, if it is a cube.
pub fn cbrt_exact(q: &Rational) -> Option<Rational> {
    let n = q.numer().cbrt();
    let d = q.denom().cbrt();
    if &(&n * &n * &n) == q.numer() && &(&d * &d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::from(1), |acc, q| num_integer::lcm(acc, q.denom().clone()))
}

/// Greatest common divisor of the numerators (non-negative; zero if all are zero).
pub fn common_numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, q| num_integer::gcd(acc, q.numer().clone()))
}

/// Scales a vector of rationals by a nonzero factor so that the result is a
/// primitive integer vector whose first nonzero entry is positive.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<Rational> {
    let den = common_denominator(values);
    let scaled: Vec<Rational> = values
        .iter()
        .map(|q| q * Rational::from_integer(den.clone()))
        .collect();
    let g = common_numerator_gcd(&scaled);
    if g.is_zero() {
        return scaled;
    }
    let mut g = Rational::from_integer(g);
    if let Some(first) = scaled.iter().find(|q| !q.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    scaled.iter().map(|q| q / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(1, 3) + rat(1, 6), rat(1, 2));
    }

    #[test]
    fn square_roots() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
        assert_eq!(cbrt_exact(&rat(-27, 8)), Some(rat(-3, 2)));
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(
            primitive_integer_vector(&[rat(-1, 2), rat(1, 3), int(0)]),
            vec![int(3), int(-2), int(0)]
        );
    }
}
