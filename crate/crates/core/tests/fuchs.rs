use painleve_core::algebra::rational::{int, rat};
use painleve_core::algebra::{parse_poly, parse_ratexpr, residue_at, RatExpr, Rational};
use painleve_core::fuchs::*;
use painleve_core::garnier_pvi::AlgebraicSolution;
use painleve_core::picard_fuchs::{lemma_coefficients, FormKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn x_eq() -> LinearODE2 {
    lemma_coefficients(FormKind::First)
}

fn y_eq() -> LinearODE2 {
    lemma_coefficients(FormKind::Second)
}

fn fin(s: &str) -> Point {
    Point::Finite(parse_ratexpr(s).unwrap())
}

fn pair(a: Rational, b: Rational) -> (Rational, Rational) {
    (a, b)
}

#[test]
fn singular_points_of_the_reference_equations() {
    let t = AlgebraicSolution::t_of_a();
    let pts = singular_points(&x_eq()).unwrap();
    assert_eq!(pts.len(), 5);
    for p in [
        fin("0"),
        fin("1"),
        Point::Finite(t.clone()),
        Point::Finite(AlgebraicSolution::eq1().lambda),
        Point::Infinity,
    ] {
        assert!(pts.contains(&p), "{p}");
    }
    let pts = singular_points(&y_eq()).unwrap();
    assert!(pts.contains(&Point::Finite(AlgebraicSolution::eq2().lambda)));
    assert!(pts.contains(&Point::Finite(t)));
    let simple = LinearODE2::new(parse_poly("s").unwrap(), parse_poly("1").unwrap(), parse_poly("1").unwrap()).unwrap();
    assert_eq!(singular_points(&simple).unwrap(), vec![fin("0"), Point::Infinity]);
}

#[test]
fn irreducible_factor_is_reported() {
    let e = LinearODE2::new(parse_poly("s^2+1").unwrap(), parse_poly("0").unwrap(), parse_poly("1").unwrap()).unwrap();
    let err = singular_points(&e).unwrap_err();
    assert!(err.to_string().contains("s^2 + 1") || err.to_string().contains("irreducible"), "{err}");
}

#[test]
fn x_equation_scheme() {
    let sch = riemann_scheme(&x_eq()).unwrap();
    let z = pair(int(0), int(0));
    assert_eq!(sch.entry(&fin("0")).unwrap().exponents, z);
    assert_eq!(sch.entry(&fin("1")).unwrap().exponents, z);
    assert_eq!(sch.entry(&Point::Finite(AlgebraicSolution::t_of_a())).unwrap().exponents, z);
    let lam = Point::Finite(AlgebraicSolution::eq1().lambda);
    assert_eq!(sch.entry(&lam).unwrap().exponents, pair(int(0), int(2)));
    assert_eq!(sch.entry(&Point::Infinity).unwrap().exponents, pair(rat(1, 4), rat(3, 4)));
    assert_eq!(sch.fuchs_sum(), int(3));
    assert!(sch.fuchs_relation_holds());
    assert_eq!(sch.apparent_points(), vec![&lam]);
}

#[test]
fn y_equation_scheme() {
    let sch = riemann_scheme(&y_eq()).unwrap();
    assert_eq!(sch.entry(&fin("0")).unwrap().exponents, pair(int(0), int(1)));
    assert_eq!(sch.entry(&fin("1")).unwrap().exponents, pair(int(0), int(0)));
    let lam = Point::Finite(AlgebraicSolution::eq2().lambda);
    assert_eq!(sch.entry(&lam).unwrap().exponents, pair(int(0), int(2)));
    assert_eq!(sch.entry(&Point::Infinity).unwrap().exponents, pair(rat(-1, 4), rat(1, 4)));
    assert_eq!(sch.fuchs_sum(), int(3));
    assert_eq!(sch.entry(&fin("0")).unwrap().apparent, Some(false));
    assert_eq!(sch.apparent_points(), vec![&lam]);
    let text = sch.to_string();
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains('*') && text.contains("-1/4"));
}

#[test]
fn apparent_and_logarithmic_points() {
    let lam = Point::Finite(AlgebraicSolution::eq1().lambda);
    let c = apparent_test(&x_eq(), &lam).unwrap();
    assert_eq!((c.verdict, c.n), (Verdict::Apparent, 2));
    assert!(c.obstruction.is_zero());
    let c = apparent_test(&y_eq(), &fin("0")).unwrap();
    assert_eq!((c.verdict, c.n), (Verdict::Logarithmic, 1));
    assert!(!c.obstruction.is_zero());
    let lam2 = Point::Finite(AlgebraicSolution::eq2().lambda);
    assert_eq!(apparent_test(&y_eq(), &lam2).unwrap().verdict, Verdict::Apparent);
    assert!(matches!(
        apparent_test(&x_eq(), &fin("0")),
        Err(painleve_core::Error::NotApplicable(_))
    ));
}

#[test]
fn exponent_sum_matches_residue() {
    for e in [x_eq(), y_eq()] {
        for p in singular_points(&e).unwrap() {
            let Point::Finite(r) = &p else { continue };
            let (x, y) = indicial_exponents(&e, &p).unwrap();
            let res = residue_at(&e.p1(), S, r).unwrap();
            assert_eq!(RatExpr::constant(x + y), &RatExpr::one() - &res, "{p}");
        }
    }
}

#[test]
fn parameters_of_the_reference_equations() {
    let p = extract_e_theta_params(&x_eq()).unwrap();
    assert_eq!(p.theta, Theta::new(int(0), int(0), int(0), rat(1, 2)));
    assert_eq!(p.theta.k(), rat(3, 16));
    assert!(p.k_consistent && p.exponent_relation);
    assert_eq!(p.lambda, AlgebraicSolution::eq1().lambda);
    assert_eq!(p.t, AlgebraicSolution::t_of_a());

    let q = extract_e_theta_params(&y_eq()).unwrap();
    assert_eq!(q.theta, Theta::new(int(1), int(0), int(0), rat(1, 2)));
    assert_eq!(q.alpha_inf, rat(-1, 4));
    assert!(q.k_consistent && q.exponent_relation);
    assert_eq!(q.lambda, AlgebraicSolution::eq2().lambda);
}

#[test]
fn e_theta_rebuilds_the_x_equation() {
    let p = extract_e_theta_params(&x_eq()).unwrap();
    let e = build_e_theta(&p.theta, &p.lambda, &p.mu, &p.t).unwrap();
    assert!(e.proportionality(&x_eq()).is_some());
    let q = extract_e_theta_params(&y_eq()).unwrap();
    let e = build_e_theta(&q.theta, &q.lambda, &q.mu, &q.t).unwrap();
    assert!(e.proportionality(&y_eq()).is_some());
}

#[test]
fn e_theta_round_trip_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let draw = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-25..=25), rng.gen_range(1..=6));
    let mut done = 0;
    while done < 100 {
        let th = Theta::new(draw(&mut rng), draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let (l, m, t) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let special = [int(0), int(1)];
        if special.contains(&t) || special.contains(&l) || l == t || th.as_array()[..3].contains(&&int(2)) {
            continue;
        }
        let c = RatExpr::constant;
        let e = build_e_theta(&th, &c(l.clone()), &c(m.clone()), &c(t.clone())).unwrap();
        let lam = Point::Finite(c(l.clone()));
        assert_eq!(apparent_test(&e, &lam).unwrap().verdict, Verdict::Apparent);
        let p = extract_e_theta_params(&e).unwrap();
        let mut want = th.clone();
        if want.thetainf < int(0) {
            want.thetainf = -&want.thetainf;
        }
        assert_eq!(p.theta, want);
        assert_eq!((p.lambda, p.mu, p.t), (c(l), c(m), c(t)));
        assert!(p.k_consistent && p.exponent_relation);
        done += 1;
    }
}

#[test]
fn coincident_points_are_rejected() {
    let th = Theta::new(int(0), int(0), int(0), rat(1, 2));
    let c = RatExpr::int;
    assert!(build_e_theta(&th, &c(3), &c(1), &c(3)).is_err());
    assert!(build_e_theta(&th, &c(0), &c(1), &c(3)).is_err());
}
