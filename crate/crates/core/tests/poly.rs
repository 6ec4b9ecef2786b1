use proptest::prelude::*;

use veronese_core::poly::rational::{int, rat};
use veronese_core::poly::{
    is_perfect_square, resultant_bivariate, square_up_to_constant, univariate_gcd, univariate_squarefree_part,
};
use veronese_core::{parse_poly, print_poly, Poly, PolyMatrix, PolySource, Rational};

const VARS: [&str; 3] = ["x", "y", "z"];

fn coefficient() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Up to six terms of total degree at most 3 in x, y, z.
fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((coefficient(), 0u32..=3, 0u32..=3, 0u32..=3), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b, e)| {
                (Poly::var("x").pow(a) * Poly::var("y").pow(b) * Poly::var("z").pow(e)).scale(&c)
            })
            .fold(Poly::zero(), |acc, t| acc + t)
    })
}

fn univariate(var: &'static str) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 1..5).prop_map(move |cs| {
        cs.iter().enumerate().map(|(k, &c)| Poly::var(var).pow(k as u32).scale(&int(c))).sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Poly::one(), a.clone());
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly(), v in 0usize..3) {
        let d = |p: &Poly| p.with_scope(&VARS).partial_derivative(VARS[v]).unwrap();
        prop_assert_eq!(d(&(&a * &b)), &d(&a) * &b + &a * &d(&b));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn squares_are_recognized(q in poly(), c in 1i64..20) {
        prop_assume!(!q.is_zero());
        let p = q.pow(2);
        let root = is_perfect_square(&p).unwrap();
        prop_assert_eq!(root.pow(2), p.clone());
        let (k, r) = square_up_to_constant(&p.scale(&int(c))).unwrap();
        prop_assert_eq!(r.pow(2).scale(&k), p.scale(&int(c)));
    }

    #[test]
    fn resultant_detects_common_factors(f in univariate("x"), g in univariate("x"), h in univariate("x")) {
        prop_assume!(h.degree_in("x") >= 1 && !f.is_zero() && !g.is_zero());
        let r = resultant_bivariate(&(&f * &h), &(&g * &h), "x").unwrap();
        prop_assert!(r.is_zero());
        let gcd = univariate_gcd(&(&f * &h), &(&g * &h), "x").unwrap();
        prop_assert!(gcd.degree_in("x") >= h.degree_in("x"));
    }

    #[test]
    fn resultant_is_product_of_root_differences(a in prop::collection::vec(-5i64..=5, 1..4), b in prop::collection::vec(-5i64..=5, 1..4)) {
        // Res(Π (x - a_i), Π (x - b_j)) = Π (a_i - b_j)
        let x = Poly::var("x");
        let f: Poly = a.iter().map(|&r| &x - &Poly::int(r)).product();
        let g: Poly = b.iter().map(|&r| &x - &Poly::int(r)).product();
        let expected: Rational = a.iter().flat_map(|&ai| b.iter().map(move |&bj| int(ai - bj))).product();
        prop_assert_eq!(resultant_bivariate(&f, &g, "x").unwrap(), Poly::constant(expected));
    }

    #[test]
    fn squarefree_part_divides(f in univariate("x"), k in 1u32..3) {
        prop_assume!(f.degree_in("x") >= 1);
        let p = f.pow(k + 1);
        let sf = univariate_squarefree_part(&p, "x").unwrap();
        prop_assert!(p.div_rem(&sf).unwrap().1.is_zero());
        prop_assert!(sf.degree_in("x") <= f.degree_in("x"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_round_trip(p in poly()) {
        let text = print_poly(&p);
        let back = parse_poly(&PolySource::new(&text, &VARS)).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    let rows: Vec<Vec<Poly>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| Poly::var(VARS[(i + j) % 3]).scale(&int((i * 4 + j) as i64 - 7)) + Poly::int((i * j) as i64))
                .collect()
        })
        .collect();
    let m = PolyMatrix::from_rows(rows).unwrap();
    assert_eq!(m.det(), m.det_cofactor());
}
