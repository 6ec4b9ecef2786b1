//! Elimination: Sylvester and Macaulay resultants, univariate gcds.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linalg::RatMatrix;
use super::matrix::det_bareiss;
use super::{Poly, PolyError, Rational};

/// Resultant of `p` and `q` with respect to `var`, as the determinant of the
/// Sylvester matrix. The result lives in the remaining variables.
pub fn resultant_bivariate(p: &Poly, q: &Poly, var: &str) -> Result<Poly, PolyError> {
    let m = p.degree_in(var);
    let n = q.degree_in(var);
    if m == 0 || p.is_zero() {
        return Err(PolyError::DegreeZero { var: var.to_string() });
    }
    if n == 0 || q.is_zero() {
        return Err(PolyError::DegreeZero { var: var.to_string() });
    }
    let (m, n) = (m as usize, n as usize);
    // descending coefficient lists
    let pc: Vec<Poly> = p.coefficients_in(var).into_iter().rev().collect();
    let qc: Vec<Poly> = q.coefficients_in(var).into_iter().rev().collect();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (k, c) in pc.iter().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Poly::zero(); size];
        for (k, c) in qc.iter().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(det_bareiss(rows).trimmed())
}

/// Dense coefficients of a univariate polynomial, lowest degree first.
pub(crate) fn to_dense(p: &Poly, var: &str) -> Result<Vec<Rational>, PolyError> {
    if p.used_variables().iter().any(|v| *v != var) {
        return Err(PolyError::NotUnivariate(var.to_string()));
    }
    let mut out = vec![Rational::zero(); p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        let e = p.named_exponents(m).first().map_or(0, |&(_, e)| e);
        out[e as usize] = c.clone();
    }
    trim(&mut out);
    Ok(out)
}

pub(crate) fn from_dense(coeffs: &[Rational], var: &str) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| Poly::var(var).pow(k as u32).scale(c))
        .sum::<Poly>()
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of dense division `a mod b`, `b` nonzero.
pub(crate) fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    dense_div_rem(a, b).1
}

pub(crate) fn dense_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let x = &c * bc;
            r[k + i] -= x;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn dense_monic(mut v: Vec<Rational>) -> Vec<Rational> {
    trim(&mut v);
    if let Some(l) = v.last().cloned() {
        for c in &mut v {
            *c /= &l;
        }
    }
    v
}

pub(crate) fn dense_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = dense_rem(&a, &b);
        a = b;
        b = r;
    }
    dense_monic(a)
}

pub(crate) fn dense_derivative(a: &[Rational]) -> Vec<Rational> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
        .collect()
}

/// Monic gcd of two univariate polynomials in `var` (zero if both are zero).
pub fn univariate_gcd(a: &Poly, b: &Poly, var: &str) -> Result<Poly, PolyError> {
    Ok(from_dense(&dense_gcd(&to_dense(a, var)?, &to_dense(b, var)?), var))
}

/// Monic squarefree part `p / gcd(p, p')`.
pub fn univariate_squarefree_part(p: &Poly, var: &str) -> Result<Poly, PolyError> {
    let a = to_dense(p, var)?;
    if a.is_empty() {
        return Ok(Poly::zero());
    }
    let g = dense_gcd(&a, &dense_derivative(&a));
    let (q, _) = dense_div_rem(&a, &g);
    Ok(from_dense(&dense_monic(q), var))
}

/// Distinct rational roots of a univariate polynomial in `var`, sorted.
/// `None` when the rational-root candidate search exceeds `max_bits`.
pub fn univariate_rational_roots(p: &Poly, var: &str, max_bits: u64) -> Result<Option<Vec<Rational>>, PolyError> {
    Ok(dense_rational_roots(&to_dense(p, var)?, max_bits))
}

/// Rational roots of a univariate polynomial with rational coefficients,
/// without multiplicity, in increasing order. `None` when the candidate
/// search would be too large (leading or constant coefficient with more
/// than `max_bits` bits after clearing denominators).
pub(crate) fn dense_rational_roots(a: &[Rational], max_bits: u64) -> Option<Vec<Rational>> {
    use num_bigint::BigInt;
    use num_integer::Integer;

    let mut a = a.to_vec();
    trim(&mut a);
    if a.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    // strip the root at zero
    let shift = a.iter().position(|c| !c.is_zero()).unwrap();
    if shift > 0 {
        roots.push(Rational::zero());
        a.drain(..shift);
    }
    if a.len() <= 1 {
        return Some(roots);
    }
    let den = super::rational::common_denominator(&a);
    let ints: Vec<BigInt> = a.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let lead = ints.last().unwrap().abs();
    let constant = ints[0].abs();
    if lead.bits() > max_bits || constant.bits() > max_bits {
        return None;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= *n {
            if n.is_multiple_of(&d) {
                out.push(d.clone());
                let e = n / &d;
                if e != d {
                    out.push(e);
                }
            }
            d += 1;
        }
        out
    };
    let ps = divisors(&constant);
    let qs = divisors(&lead);
    let mut found: Vec<Rational> = Vec::new();
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let cand = Rational::new(p * sign, q.clone());
                if found.contains(&cand) {
                    continue;
                }
                let value = a.iter().rev().fold(Rational::zero(), |acc, c| acc * &cand + c);
                if value.is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Some(roots)
}

/// Macaulay resultant of three ternary forms of a common degree `d` in the
/// variables `vars`. Zero exactly when the forms have a common projective zero.
///
/// Uses a fixed seed for the coordinate changes needed when the extraneous
/// minor vanishes.
pub fn macaulay_resultant_ternary(f: [&Poly; 3], vars: [&str; 3]) -> Result<Rational, PolyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6361);
    macaulay_resultant_ternary_with_rng(f, vars, &mut rng)
}

const MACAULAY_RETRIES: usize = 8;

pub fn macaulay_resultant_ternary_with_rng<R: Rng>(
    f: [&Poly; 3],
    vars: [&str; 3],
    rng: &mut R,
) -> Result<Rational, PolyError> {
    if f.iter().any(|p| p.is_zero()) {
        return Ok(Rational::zero());
    }
    let d = f[0].total_degree();
    for p in f {
        if p.used_variables().iter().any(|v| !vars.contains(v)) || !p.is_homogeneous_in(&vars, d) {
            return Err(PolyError::NotHomogeneous { expected: d });
        }
    }
    if d == 0 {
        return Ok(f.iter().map(|p| p.as_constant().unwrap()).product());
    }
    if let Some(r) = macaulay_quotient(f, vars, d) {
        return Ok(r);
    }
    for _ in 0..MACAULAY_RETRIES {
        let t = loop {
            let m = RatMatrix::from_rows(
                (0..3)
                    .map(|_| (0..3).map(|_| Rational::from_integer(rng.gen_range(-5i64..=5).into())).collect())
                    .collect(),
            );
            if !m.det().is_zero() {
                break m;
            }
        };
        let images: Vec<(&str, Poly)> = (0..3)
            .map(|i| {
                let img = (0..3).map(|j| Poly::var(vars[j]).scale(&t[(i, j)])).sum::<Poly>();
                (vars[i], img)
            })
            .collect();
        let g: Vec<Poly> = f.iter().map(|p| p.substitute(&images)).collect();
        if let Some(r) = macaulay_quotient([&g[0], &g[1], &g[2]], vars, d) {
            // Res(f o T) = det(T)^(d^3) Res(f)
            let scale = t.det().pow((d * d * d) as i32);
            return Ok(r / scale);
        }
    }
    macaulay_perturbed(f, vars, d).ok_or(PolyError::MacaulayDegenerate(MACAULAY_RETRIES))
}

fn macaulay_quotient(f: [&Poly; 3], vars: [&str; 3], d: u32) -> Option<Rational> {
    let (m, keep) = macaulay_matrix(f, vars, d);
    let minor = m.minor(&keep, &keep);
    if minor.is_zero() {
        return None;
    }
    Some(m.det() / minor)
}

/// Fallback when the extraneous minor vanishes in every coordinate system
/// tried: perturb to `f_i - e*x_i^d`, which turns both matrices into
/// `M - e*I` and `M' - e*I`. Their quotient is a polynomial in `e` whose
/// value at `e = 0` is the resultant; recover it by interpolation from
/// nonzero sample points.
fn macaulay_perturbed(f: [&Poly; 3], vars: [&str; 3], d: u32) -> Option<Rational> {
    let (m, keep) = macaulay_matrix(f, vars, d);
    let n = m.nrows();
    let degree = n - keep.len();
    let mut samples: Vec<(Rational, Rational)> = Vec::new();
    let mut e = 0i64;
    while samples.len() <= degree {
        e += 1;
        if e as usize > 2 * n + degree + 2 {
            return None;
        }
        let shift = Rational::from_integer(e.into());
        let mut me = m.clone();
        for i in 0..n {
            me[(i, i)] -= &shift;
        }
        let minor = me.minor(&keep, &keep);
        if minor.is_zero() {
            continue;
        }
        samples.push((shift, me.det() / minor));
    }
    // Lagrange interpolation at zero
    let mut value = Rational::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut w = yi.clone();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i != j {
                w *= xj / (xj - xi);
            }
        }
        value += w;
    }
    Some(value)
}

fn macaulay_matrix(f: [&Poly; 3], vars: [&str; 3], d: u32) -> (RatMatrix, Vec<usize>) {
    let big_d = 3 * d - 2;
    let mut monomials: Vec<[u32; 3]> = Vec::new();
    for a in (0..=big_d).rev() {
        for b in (0..=big_d - a).rev() {
            monomials.push([a, b, big_d - a - b]);
        }
    }
    let index = |e: [u32; 3]| -> usize {
        // position in the list above
        let a = e[0];
        let b = e[1];
        let before: u32 = (a + 1..=big_d).map(|aa| big_d - aa + 1).sum();
        (before + (big_d - a - b)) as usize
    };
    let coeffs: Vec<Vec<([u32; 3], Rational)>> = f
        .iter()
        .map(|p| {
            p.terms()
                .map(|(m, c)| {
                    let named = p.named_exponents(m);
                    let mut e = [0u32; 3];
                    for (v, k) in named {
                        let i = vars.iter().position(|w| *w == v).unwrap();
                        e[i] = k;
                    }
                    (e, c.clone())
                })
                .collect()
        })
        .collect();
    let n = monomials.len();
    let mut m = RatMatrix::zeros(n, n);
    let mut reduced = vec![false; n];
    for (row, mono) in monomials.iter().enumerate() {
        let i = (0..3).find(|&i| mono[i] >= d).expect("degree 3d-2 forces some exponent >= d");
        let divisible = (0..3).filter(|&k| mono[k] >= d).count();
        reduced[row] = divisible == 1;
        let mut shift = *mono;
        shift[i] -= d;
        for (e, c) in &coeffs[i] {
            let target = [shift[0] + e[0], shift[1] + e[1], shift[2] + e[2]];
            m[(row, index(target))] = c.clone();
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&k| !reduced[k]).collect();
    (m, keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;

    fn v(name: &str) -> Poly {
        Poly::var(name)
    }

    #[test]
    fn linear_resultant() {
        let r = resultant_bivariate(&(v("x") - v("a")), &(v("x") - v("b")), "x").unwrap();
        assert_eq!(r, v("a") - v("b"));
    }

    #[test]
    fn shared_root_gives_zero() {
        let r = resultant_bivariate(&(v("x").pow(2) - Poly::int(1)), &(v("x") - Poly::int(1)), "x").unwrap();
        assert!(r.is_zero());
        assert!(resultant_bivariate(&v("y"), &v("x"), "x").is_err());
    }

    #[test]
    fn gcd_and_squarefree() {
        let x = v("x");
        let a = (&x - Poly::int(1)).pow(2) * (&x + Poly::int(2));
        let b = (&x - Poly::int(1)) * (&x - Poly::int(3));
        assert_eq!(univariate_gcd(&a, &b, "x").unwrap(), &x - Poly::int(1));
        assert_eq!(
            univariate_squarefree_part(&a, "x").unwrap(),
            (&x - Poly::int(1)) * (&x + Poly::int(2))
        );
        assert!(univariate_gcd(&(&x * v("y")), &x, "x").is_err());
    }

    #[test]
    fn rational_roots() {
        let x = v("x");
        let p = (x.scale(&int(2)) - Poly::int(3)) * (&x + Poly::int(5)) * x.clone() * (x.pow(2) + Poly::int(1));
        let roots = dense_rational_roots(&to_dense(&p, "x").unwrap(), 64).unwrap();
        assert_eq!(roots, vec![int(-5), int(0), crate::poly::rational::rat(3, 2)]);
    }

    #[test]
    fn macaulay_diagonal_forms() {
        let f = [v("x").pow(3).scale(&int(4)), v("y").pow(3).scale(&int(4)), v("z").pow(3).scale(&int(4))];
        let r = macaulay_resultant_ternary([&f[0], &f[1], &f[2]], ["x", "y", "z"]).unwrap();
        assert_eq!(r, int(64).pow(9));
    }

    #[test]
    fn macaulay_common_zero() {
        let (x, y) = (v("x"), v("y"));
        let f1 = (&x * y.pow(2)).scale(&int(2));
        let f2 = (x.pow(2) * &y).scale(&int(2));
        let f3 = Poly::zero();
        assert!(macaulay_resultant_ternary([&f1, &f2, &f3], ["x", "y", "z"]).unwrap().is_zero());
        // common zero [0:0:1] with no zero input
        let g3 = x.pow(3) + y.pow(3);
        assert!(macaulay_resultant_ternary([&f1, &f2, &g3], ["x", "y", "z"]).unwrap().is_zero());
    }

    #[test]
    fn macaulay_coordinate_change_is_normalized() {
        // det M' vanishes for some inputs; the retry path rescales by det(T)^(d^3)
        let (x, y, z) = (v("x"), v("y"), v("z"));
        let f = [x.pow(2) + y.pow(2), y.pow(2) + z.pow(2), x.pow(2) + z.pow(2) + &x * &y];
        let direct = macaulay_quotient([&f[0], &f[1], &f[2]], ["x", "y", "z"], 2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = [[1, 1, 0], [0, 1, 1], [1, 0, 2]];
        let images: Vec<(&str, Poly)> = ["x", "y", "z"]
            .iter()
            .enumerate()
            .map(|(i, name)| (*name, (0..3).map(|j| v(["x", "y", "z"][j]).scale(&int(t[i][j]))).sum()))
            .collect();
        let g: Vec<Poly> = f.iter().map(|p| p.substitute(&images)).collect();
        let moved = macaulay_resultant_ternary_with_rng([&g[0], &g[1], &g[2]], ["x", "y", "z"], &mut rng).unwrap();
        let det_t = int(3);
        if let Some(direct) = direct {
            assert_eq!(moved, direct * det_t.pow(8));
        }
    }

    #[test]
    fn perturbed_route_matches_quotient() {
        let (x, y, z) = (v("x"), v("y"), v("z"));
        let f = [
            x.pow(3) + (&y * &z * &x).scale(&int(2)) - z.pow(3),
            y.pow(3) - (&x * y.pow(2)).scale(&int(3)) + z.pow(2) * &x,
            z.pow(3) + x.pow(2) * &y + y.pow(3).scale(&int(5)),
        ];
        let vars = ["x", "y", "z"];
        let direct = macaulay_quotient([&f[0], &f[1], &f[2]], vars, 3).unwrap();
        assert!(!direct.is_zero());
        assert_eq!(macaulay_perturbed([&f[0], &f[1], &f[2]], vars, 3), Some(direct));
    }

    #[test]
    fn macaulay_rejects_inhomogeneous() {
        let f = v("x").pow(2) + v("y");
        let g = v("y").pow(2);
        assert!(macaulay_resultant_ternary([&f, &g, &g], ["x", "y", "z"]).is_err());
    }
}
