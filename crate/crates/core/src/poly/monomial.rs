use std::cmp::Ordering;

/// Exponent vector aligned with the variable scope of the owning [`Poly`](super::Poly).
///
/// Ordering is graded lexicographic: total degree first, then the exponent of
/// the first scope variable, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub(crate) fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    /// Halves every exponent, or `None` if some exponent is odd.
    pub(crate) fn sqrt(&self) -> Option<Monomial> {
        if self.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        Some(Monomial(self.0.iter().map(|e| e / 2).collect()))
    }

    pub(crate) fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| u32::from(e) * w).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        // x^2 > x*y > y^2 > x > y > 1 in scope (x, y)
        let mut v = [
            Monomial(vec![0, 1]),
            Monomial(vec![2, 0]),
            Monomial(vec![0, 0]),
            Monomial(vec![0, 2]),
            Monomial(vec![1, 1]),
            Monomial(vec![1, 0]),
        ];
        v.sort();
        v.reverse();
        let exps: Vec<_> = v.iter().map(|m| m.0.clone()).collect();
        assert_eq!(
            exps,
            vec![
                vec![2, 0],
                vec![1, 1],
                vec![0, 2],
                vec![1, 0],
                vec![0, 1],
                vec![0, 0]
            ]
        );
    }

    #[test]
    fn divisibility() {
        let a = Monomial(vec![1, 2]);
        let b = Monomial(vec![3, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial(vec![2, 0]));
        assert_eq!(Monomial(vec![2, 4]).sqrt(), Some(a));
        assert_eq!(b.sqrt(), None);
    }
}
