//! Acceptance run: one PASS/FAIL line per criterion. All comparisons are
//! exact (tolerance zero); runtime limits are wall-clock.
//!
//! Two criteria fail for reasons recorded in the decisions ledger: the
//! printed Klein g6 golden (criterion 1) and the stated bitangent witness,
//! which is a singular quartic (criterion 5). The run exits non-zero only if
//! the set of failures differs from that.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use veronese_cli::run_args;
use veronese_core::cone::{
    classify_and_lift, cone_equation, is_singular_point, node_certificate, plucker_ledger, s4_family, Branch,
    Lambda,
};
use veronese_core::covariants::{
    covariants, dual_curve, j_eval_coords, j_from_roots, j_of_binary_quartic, line_restriction_closed_form,
    line_restriction_substitution, QuarticCurve, DUAL, PLANE,
};
use veronese_core::octad::{
    aronhold_check, bitangents, cremona_octad, eighth_point, hessian_quartic, net_from_heptad, pencil_fiber,
    standard_heptad, OctadError,
};
use veronese_core::poly::macaulay_resultant_ternary;
use veronese_core::poly::rational::{int, rat};
use veronese_core::projective::projective_equivalence;
use veronese_core::theta::{
    aronhold_systems, build_model, even_from_heptad, even_histogram, odd_characteristics, theta_ijkl, triple_sum,
    AronholdSystem,
};
use veronese_core::{parse_poly, Poly, PolySource, Rational, ThetaChar};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli(args: &[&str]) -> Value {
    let out = run_args(std::iter::once("veronese").chain(args.iter().copied()));
    serde_json::from_str(&out.stdout).expect("json report")
}

fn poly(text: &str, vars: &[&str]) -> Poly {
    parse_poly(&PolySource::new(text, vars)).expect("golden parses")
}

fn same(a: &Value, golden: &str, vars: &[&str]) -> bool {
    a.as_str().is_some_and(|s| {
        let got = poly(s, vars);
        let want = poly(golden, vars);
        got == want.with_scope(got.scope())
    })
}

fn quartic(text: &str) -> QuarticCurve {
    QuarticCurve::new(poly(text, &PLANE)).expect("quartic")
}

const KLEIN: &str = "x^3*y + y^3*z + z^3*x";
const FERMAT: &str = "x^4 + y^4 + z^4";
const TRIVIAL_AUT: &str = "x^4 + y^4 + z^4 + x^3*y + 2*x^3*z";

fn criterion_1() -> Outcome {
    let stu = ["s", "t", "u"];
    let limit = Duration::from_secs(5);
    let mut failures = Vec::new();
    let mut slow = Vec::new();
    let mut check = |name: &str, args: &[&str], g4: &str, g6: &str, vars: &[&str]| {
        let start = Instant::now();
        let v = cli(args);
        if start.elapsed() > limit {
            slow.push(format!("{name} {:.1?}", start.elapsed()));
        }
        if !same(&v["g4"], g4, vars) {
            failures.push(format!("{name} g4"));
        }
        if !same(&v["g6"], g6, vars) {
            failures.push(format!("{name} g6"));
        }
    };
    check(
        "Klein",
        &["covariants", &data("klein.quartic")],
        "s^3*t + t^3*u + u^3*s",
        "1/8*(3*s^5*u - 15*s^2*t^2*u^2 + 3*s*t^5 + 3*t*u^5)",
        &stu,
    );
    check("Fermat", &["covariants", &data("fermat.quartic")], "4*(s^4 + t^4 + u^4)", "16*s^2*t^2*u^2", &stu);
    check(
        "trivial-aut",
        &["covariants", &data("trivial_aut.quartic")],
        "4*(s^4 - s*t^3 - 2*s*u^3 + t^4 + u^4)",
        "-16*s^3*t^2*u - 8*s^3*t*u^2 + 16*s^2*t^2*u^2 - 4*t^6 + 4*t^5*u - t^4*u^2 - 4*t^2*u^4 + 4*t*u^5 - u^6",
        &stu,
    );
    check(
        "S4(lambda)",
        &["s4", "--lambda", "symbolic"],
        "1/3*(lambda^2 + 12)*(s^4 + t^4 + u^4) + 2/3*(lambda^2 + 6*lambda)*(t^2*u^2 + s^2*u^2 + s^2*t^2)",
        "2/9*(-lambda^3 + 12*lambda^2 + 12*lambda)*(t^4*u^2 + t^2*u^4 + s^4*u^2 + s^2*u^4 + s^4*t^2 + s^2*t^4) \
         + 2/27*(-lambda^3 + 36*lambda)*(s^6 + t^6 + u^6) + 4/9*(8*lambda^3 - 9*lambda^2 + 36)*s^2*t^2*u^2",
        &["s", "t", "u", "lambda"],
    );
    let mut detail = if failures.is_empty() {
        "g4, g6 equal for Klein, Fermat, trivial-aut, S4(lambda)".to_string()
    } else {
        format!("mismatch: {} (computed Klein g6 = s^5*u - 5*s^2*t^2*u^2 + s*t^5 + t*u^5)", failures.join(", "))
    };
    if !slow.is_empty() {
        detail.push_str(&format!("; over 5 s: {}", slow.join(", ")));
    }
    outcome(failures.is_empty() && slow.is_empty(), detail)
}

fn random_quartic(rng: &mut ChaCha8Rng) -> Poly {
    let mut p = Poly::zero();
    for i in 0..=4u32 {
        for j in 0..=4 - i {
            let c = int(rng.gen_range(-9..=9));
            p = p + (Poly::var("x").pow(i) * Poly::var("y").pow(j) * Poly::var("z").pow(4 - i - j)).scale(&c);
        }
    }
    p
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    let mut done = 0;
    while done < 500 {
        let p = random_quartic(&mut rng);
        if p.is_zero() {
            continue;
        }
        let c = QuarticCurve::new(p).expect("homogeneous quartic");
        // covariants() divides h2 by u^4 and h3 by u^6 exactly or fails
        let ok = line_restriction_substitution(&c) == line_restriction_closed_form(&c) && covariants(&c).is_ok();
        bad += usize::from(!ok);
        done += 1;
    }
    let t = start.elapsed();
    outcome(
        bad == 0 && t < Duration::from_secs(120),
        format!("500 quartics, {bad} failures, {:.1} s (limit 120 s)", t.as_secs_f64()),
    )
}

fn distinct_quadruple(rng: &mut ChaCha8Rng) -> [Rational; 4] {
    let mut s = BTreeSet::new();
    while s.len() < 4 {
        s.insert(rat(rng.gen_range(-40..=40), rng.gen_range(1..=5)));
    }
    let v: Vec<Rational> = s.into_iter().collect();
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if HashSet::from([a, b, c, d]).len() == 4 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn monic_from_roots(a: &[Rational; 4]) -> [Rational; 5] {
    let mut c = vec![int(1)];
    for root in a {
        let mut next = vec![int(0); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k] += ck;
            next[k + 1] -= ck * root;
        }
        c = next;
    }
    [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone(), c[4].clone()]
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let perms = permutations();
    let mut bad_perm = 0;
    let mut bad_route = 0;
    for _ in 0..100 {
        let x = distinct_quadruple(&mut rng);
        let j = j_from_roots(&x).unwrap();
        for p in &perms {
            let y = [x[p[0]].clone(), x[p[1]].clone(), x[p[2]].clone(), x[p[3]].clone()];
            bad_perm += usize::from(j_from_roots(&y).unwrap() != j);
        }
        bad_route += usize::from(j_of_binary_quartic(&monic_from_roots(&x)).unwrap() != j);
    }
    let mut bad_lines = 0;
    let mut lines = 0;
    while lines < 50 {
        // C = L K + Π (x - a_i y) meets L in the points with x/y = a_i
        let x = distinct_quadruple(&mut rng);
        let (s, t, u) = (int(rng.gen_range(-5..=5)), int(rng.gen_range(-5..=5)), int(rng.gen_range(1..=5)));
        let l = Poly::var("x").scale(&s) + Poly::var("y").scale(&t) + Poly::var("z").scale(&u);
        let mut k = Poly::zero();
        for i in 0..=3u32 {
            for jj in 0..=3 - i {
                let c = int(rng.gen_range(-4..=4));
                k = k + (Poly::var("x").pow(i) * Poly::var("y").pow(jj) * Poly::var("z").pow(3 - i - jj)).scale(&c);
            }
        }
        let roots: Poly = x.iter().map(|a| Poly::var("x") - Poly::var("y").scale(a)).product();
        let curve = QuarticCurve::new(&l * &k + roots).unwrap();
        let cp = covariants(&curve).unwrap();
        bad_lines += usize::from(j_eval_coords(&cp, &[s, t, u]).ok() != Some(j_from_roots(&x).unwrap()));
        lines += 1;
    }
    outcome(
        bad_perm + bad_route + bad_lines == 0,
        format!(
            "100 quadruples x 24 permutations ({bad_perm} mismatches), invariant route ({bad_route}), 50 lines ({bad_lines})"
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut degrees = Vec::new();
    for q in [KLEIN, FERMAT, TRIVIAL_AUT] {
        degrees.push(dual_curve(&covariants(&quartic(q)).unwrap()).g.total_degree());
    }
    // the symbolic family: degree in s, t, u after specialization
    let family = s4_family(Lambda::Symbolic).unwrap();
    for l in [1, 3, 5] {
        let cp = family.covariants.evaluate(&[("lambda", int(l))]);
        degrees.push(dual_curve(&cp).g.total_degree());
    }
    outcome(degrees.iter().all(|&d| d == 12), format!("deg G = {degrees:?}"))
}

/// Smoothness resultant, singularity of (0,0,1) on G, o-branch lift singular on V, node determinant.
fn bitangent_witness(text: &str) -> (bool, String) {
    let c = quartic(text);
    let f = c.poly().with_scope(&PLANE);
    let d: Vec<Poly> = PLANE.iter().map(|v| f.partial_derivative(v).unwrap()).collect();
    let res = macaulay_resultant_ternary([&d[0], &d[1], &d[2]], PLANE).unwrap();
    let cp = covariants(&c).unwrap();
    let g = dual_curve(&cp).g.with_scope(&DUAL);
    let at: Vec<(&str, Rational)> = vec![("s", int(0)), ("t", int(0)), ("u", int(1))];
    let g_singular = g.eval_at(&at).unwrap().is_zero()
        && DUAL.iter().all(|v| g.partial_derivative(v).unwrap().eval_at(&at).unwrap().is_zero());
    let cone = cone_equation(&cp);
    let (lift_ok, det) = match classify_and_lift(&cp, &[int(0), int(0), int(1)]) {
        Ok(lift) => {
            let singular = lift.branch == Branch::Ordinary && is_singular_point(&cone, &lift.point).unwrap_or(false);
            let det = node_certificate(&cone, &lift.point).map(|n| n.determinant).unwrap_or_else(|_| int(0));
            (singular, det)
        }
        Err(_) => (false, int(0)),
    };
    let passed = !res.is_zero() && g_singular && lift_ok && !det.is_zero();
    let detail = format!(
        "resultant {}, (0,0,1) singular on G: {g_singular}, lift singular on V: {lift_ok}, Hessian det {det}",
        if res.is_zero() { "0" } else { "nonzero" }
    );
    (passed, detail)
}

fn criterion_5() -> (Outcome, Outcome) {
    let start = Instant::now();
    let (stated, d1) = bitangent_witness("(x^2 - y^2)^2 + z*(x^3 + y^3 + z^3)");
    let (corrected, d2) = bitangent_witness(&std::fs::read_to_string(data("bitangent_witness.quartic")).unwrap());
    let t = start.elapsed();
    let in_time = t < Duration::from_secs(30);
    (
        outcome(stated && in_time, format!("stated C_B: {d1}; {:.1} s (limit 30 s)", t.as_secs_f64())),
        outcome(corrected && in_time, format!("(x^2-y^2)^2 + z(x^3+2y^3+z^3): {d2}")),
    )
}

fn criterion_6() -> Outcome {
    let relations = (0..=12).all(|ds| {
        let c = plucker_ledger(ds).unwrap();
        c.delta_o + c.delta_s == 28 && c.iota + 2 * c.delta_s == 24
    });
    let infeasible = plucker_ledger(13).is_err();
    let generic = plucker_ledger(0).unwrap().dual_singular_points();
    let fermat = plucker_ledger(12).unwrap().dual_singular_points();
    outcome(
        relations && infeasible && generic == 52 && fermat == 28,
        format!("relations hold for 0..=12, delta_s = 13 rejected; delta_s = 0: {generic}, delta_s = 12: {fermat}"),
    )
}

fn criterion_7_to_9() -> (Outcome, Outcome, Outcome) {
    let start = Instant::now();
    let report = aronhold_check(&standard_heptad()).unwrap();
    let net = net_from_heptad(&standard_heptad()).unwrap();
    let hessian = hessian_quartic(&net);
    let octad = eighth_point(&net).unwrap();
    let p8 = octad.point(8).unwrap().to_vec();
    let p8_ok = net.contains(&p8) && octad.points().iter().all(|p| net.contains(p));
    let lines = bitangents(&octad, &net, &hessian, false).unwrap();
    let certified = lines.iter().filter(|b| b.certificate_holds()).count();
    let distinct: HashSet<Vec<Rational>> = lines.iter().map(|b| b.line.clone()).collect();
    let t = start.elapsed();
    let seven = outcome(
        report.net_dimension == 3
            && hessian.smooth
            && p8_ok
            && certified == 28
            && distinct.len() == 28
            && t < Duration::from_secs(120),
        format!(
            "net dimension {}, Hessian smooth: {}, P8 = {:?} on the net: {p8_ok}, {certified}/28 squares, {} distinct lines, {:.1} s (limit 120 s)",
            report.net_dimension,
            hessian.smooth,
            p8.iter().map(ToString::to_string).collect::<Vec<_>>(),
            distinct.len(),
            t.as_secs_f64()
        ),
    );

    let mut eight_ok = true;
    let mut notes = Vec::new();
    for center in [[1, 2, 3, 4], [5, 6, 7, 8]] {
        let c = cremona_octad(&octad, &net, center).unwrap();
        let back = cremona_octad(&c.octad, &c.net, center).unwrap();
        let returns = projective_equivalence(octad.points(), back.octad.points()).is_some();
        eight_ok &= c.determinant_preserved && back.determinant_preserved && returns;
        notes.push(format!(
            "{center:?}: det preserved {} (scalar {}), twice = identity up to PGL4: {returns}",
            c.determinant_preserved, c.scalar
        ));
    }
    let eight = outcome(eight_ok, notes.join("; "));

    let cp = covariants(&QuarticCurve::new(hessian.quartic.clone()).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut checked, mut skipped, mut bad) = (0, 0, 0);
    while checked < 20 {
        let p1: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
        let p2: Vec<Rational> = (0..3).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
        match pencil_fiber(&net, &p1, &p2) {
            Ok(f) => {
                bad += usize::from(j_eval_coords(&cp, &f.dual_point()).ok() != Some(f.j.clone()) || !f.routes_agree());
                checked += 1;
            }
            Err(OctadError::DependentPencil | OctadError::NonSquarefree | OctadError::DegeneratePencil) => skipped += 1,
            Err(_) => {
                bad += 1;
                checked += 1;
            }
        }
    }
    let nine = outcome(bad == 0, format!("20 pencils, {bad} mismatches ({skipped} degenerate draws skipped)"));
    (seven, eight, nine)
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let model = build_model();
    let odd = model.iter().filter(|t| t.is_odd()).count();
    let even = model.len() - odd;
    let systems = aronhold_systems(false);
    let valid = systems.iter().all(AronholdSystem::is_valid);
    let hist = even_histogram(&systems);
    let fibers = hist.len() == 36 && hist.values().all(|&n| n == 8);
    let pair = |i, j| ThetaChar::pair(i, j).unwrap();
    let mut triangle = true;
    for i in 1..=8 {
        for j in i + 1..=8 {
            for k in j + 1..=8 {
                triangle &= triple_sum(pair(i, j), pair(i, k), pair(j, k)) == ThetaChar::theta0();
            }
        }
    }
    let mut representations = odd_characteristics().len() == 28;
    for r in 1..=8 {
        representations &= even_from_heptad(r).unwrap() == ThetaChar::theta0();
        let others: Vec<usize> = (1..=8).filter(|&i| i != r).collect();
        let mut seen = HashSet::new();
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    let t = theta_ijkl(r, others[a], others[b], others[c]).unwrap();
                    representations &= !t.is_odd() && t != ThetaChar::theta0();
                    seen.insert(t);
                }
            }
        }
        representations &= seen.len() == 35;
    }
    let t = start.elapsed();
    outcome(
        odd == 28 && even == 36 && systems.len() == 288 && valid && fibers && triangle && representations && t < Duration::from_secs(60),
        format!(
            "{odd} odd, {even} even, {} Aronhold systems, every even hit 8 times: {fibers}, triangle relation: {triangle}, \
             seven-point representations: {representations}, {:.2} s (limit 60 s)",
            systems.len(),
            t.as_secs_f64()
        ),
    )
}

fn criterion_11() -> Outcome {
    let symbolic = s4_family(Lambda::Symbolic).unwrap();
    let identity = symbolic.identity_holds();
    let three = s4_family(Lambda::Value(int(3))).unwrap();
    let planes = three.planes.as_ref().unwrap();
    let planes_ok = planes.gamma == int(4) && planes.planes_on_cone;
    let zero = s4_family(Lambda::Value(int(0))).unwrap();
    let fermat = covariants(&quartic(FERMAT)).unwrap();
    let fermat_ok = zero.fermat_consistent == Some(true)
        && zero.covariants.g4 == fermat.g4.with_scope(zero.covariants.g4.scope())
        && zero.covariants.g6 == fermat.g6.with_scope(zero.covariants.g6.scope());
    outcome(
        identity && planes_ok && fermat_ok,
        format!(
            "s^2t^2u^2 identity symbolic in lambda: {identity}; planes for lambda = 3 (gamma = {}) on the cone: {}; lambda = 0 equals Fermat: {fermat_ok}",
            planes.gamma, planes.planes_on_cone
        ),
    )
}

fn main() {
    let one = criterion_1();
    let two = criterion_2();
    let three = criterion_3();
    let four = criterion_4();
    let (five, five_corrected) = criterion_5();
    let six = criterion_6();
    let (seven, eight, nine) = criterion_7_to_9();
    let results: Vec<(usize, &str, Outcome)> = vec![
        (1, "golden covariants", one),
        (2, "appendix consistency", two),
        (3, "j coherence", three),
        (4, "dual curve degree", four),
        (5, "node on the double Veronese cone", five),
        (6, "Plucker ledger", six),
        (7, "octad suite", seven),
        (8, "Cremona invariance", eight),
        (9, "jV = jC on pencils", nine),
        (10, "theta counts", criterion_10()),
        (11, "S4 family identities", criterion_11()),
    ];

    for (n, name, o) in &results {
        println!("criterion {n:>2} {} {name}: {} [exact]", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if *n == 5 {
            println!(
                "   info    {} corrected witness: {}",
                if five_corrected.passed { "PASS" } else { "FAIL" },
                five_corrected.detail
            );
        }
    }

    let failed: BTreeSet<usize> = results.iter().filter(|(_, _, o)| !o.passed).map(|(n, _, _)| *n).collect();
    let known: BTreeSet<usize> = [1, 5].into();
    let klein_only = results[0].2.passed || results[0].2.detail.starts_with("mismatch: Klein g6 (");
    let expected = failed.is_subset(&known) && klein_only && five_corrected.passed;
    println!(
        "{} of 11 criteria pass; failing: {:?} (known, analyzed: {:?})",
        11 - failed.len(),
        failed,
        known
    );
    if !expected {
        println!("unexpected acceptance result");
        std::process::exit(1);
    }
}
