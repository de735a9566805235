use std::collections::BTreeMap;

use painleve_core::algebra::rational::{int, rat};
use painleve_core::algebra::{parse_ratexpr, RatExpr, Rational, Var};
use painleve_core::fuchs::{extract_e_theta_params, Theta};
use painleve_core::garnier_pvi::*;
use painleve_core::picard_fuchs::{lemma_coefficients, FormKind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn theta(x: [Rational; 4]) -> Theta {
    let [a, b, c, d] = x;
    Theta::new(a, b, c, d)
}

fn theta_x() -> Theta {
    theta([int(0), int(0), int(0), rat(1, 2)])
}

fn theta_y() -> Theta {
    theta([int(1), int(0), int(0), rat(-1, 2)])
}

fn residual(sol: &AlgebraicSolution, p: &PVIParams, v: PVIVariant) -> RatExpr {
    pvi_residual_on_curve(sol, p, v).unwrap()
}

#[test]
fn eq1_solves_the_whole_pencil() {
    let r = residual(&AlgebraicSolution::eq1(), &PVIParams::pencil(), PVIVariant::Standard);
    assert!(r.is_zero(), "{r}");
    assert_eq!(pencil_decompose(&r).unwrap(), (RatExpr::zero(), RatExpr::zero()));
}

#[test]
fn eq1_at_sigma_one_and_zero() {
    let e = rat(1, 8);
    let sol = AlgebraicSolution::eq1();
    let all = PVIParams::constant([e.clone(), e.clone(), e.clone(), e.clone()]);
    assert!(residual(&sol, &all, PVIVariant::Standard).is_zero());
    let base = PVIParams::constant([e, int(0), int(0), int(0)]);
    let (r0, r1) = pencil_decompose(&residual(&sol, &base, PVIVariant::Standard)).unwrap();
    assert!(r0.is_zero() && r1.is_zero());
}

#[test]
fn eq1_fails_at_trivial_parameters() {
    let z = int(0);
    let p = PVIParams::constant([z.clone(), z.clone(), z.clone(), z]);
    assert!(!residual(&AlgebraicSolution::eq1(), &p, PVIVariant::Standard).is_zero());
}

#[test]
fn eq2_solves_its_equation() {
    let p = alpha_from_theta(&theta_y());
    assert_eq!(p, PVIParams::constant([rat(1, 8), rat(1, 2), int(0), int(0)]));
    assert!(residual(&AlgebraicSolution::eq2(), &p, PVIVariant::Standard).is_zero());
}

#[test]
fn alternative_denominator_fails() {
    let r = residual(&AlgebraicSolution::eq1(), &PVIParams::pencil(), PVIVariant::Printed);
    assert!(!r.is_zero());
    let p = alpha_from_theta(&theta_y());
    assert!(!residual(&AlgebraicSolution::eq2(), &p, PVIVariant::Printed).is_zero());
}

#[test]
fn pencil_decompose_examples() {
    let x = parse_ratexpr("sigma*(a+1)").unwrap();
    assert_eq!(pencil_decompose(&x).unwrap(), (RatExpr::zero(), parse_ratexpr("a+1").unwrap()));
    assert!(pencil_decompose(&parse_ratexpr("sigma^2*a").unwrap()).is_err());
    assert!(pencil_decompose(&parse_ratexpr("a/sigma").unwrap()).is_err());
}

#[test]
fn sigma_part_is_the_bracket() {
    // residual = λ_tt − RHS, so the σ-part is minus the prefactor times the bracket
    for sol in [AlgebraicSolution::eq1(), AlgebraicSolution::eq2()] {
        let r = residual(&sol, &PVIParams::pencil(), PVIVariant::Standard);
        let (_, r1) = pencil_decompose(&r).unwrap();
        let (l, t) = (&sol.lambda, &sol.t);
        let one = RatExpr::one();
        let pre = (&(l * &(l - &one)) * &(l - t))
            .checked_div(&PVIVariant::Standard.denominator(t))
            .unwrap()
            .scale(&rat(-1, 8));
        assert_eq!(r1, &pre * &bracket_identity_check(&sol).unwrap());
    }
}

#[test]
fn bracket_identity() {
    assert!(bracket_identity_check(&AlgebraicSolution::eq1()).unwrap().is_zero());
    assert!(!bracket_identity_check(&AlgebraicSolution::eq2()).unwrap().is_zero());
    // a = 3: t = −27/5, λ = −9/7
    let sol = AlgebraicSolution::eq1()
        .reparameterize(&RatExpr::int(3))
        .unwrap();
    assert_eq!(sol.t.as_const(), Some(rat(-27, 5)));
    assert_eq!(sol.lambda.as_const(), Some(rat(-9, 7)));
    let (l, t) = (rat(-9, 7), rat(-27, 5));
    let one = int(1);
    let terms = [
        -&t / (&l * &l),
        (&t - &one) / ((&l - &one) * (&l - &one)),
        -(&t * (&t - &one)) / ((&l - &t) * (&l - &t)),
    ];
    assert_eq!(terms, [rat(49, 15), rat(-49, 40), rat(-49, 24)]);
    assert_eq!(terms.iter().fold(int(0), |acc, x| acc + x), int(0));
}

#[test]
fn hamiltonian_examples() {
    assert_eq!(theta_x().k(), rat(3, 16));
    assert_eq!(theta_y().k(), rat(-1, 16));
    let th = theta([rat(1, 3), rat(2, 5), rat(-1, 7), rat(3, 4)]);
    let k = hamiltonian_k(&th);
    let at_mu0 = k.substitute_one(Var::Mu, &RatExpr::zero()).unwrap();
    let expect = parse_ratexpr("lambda/(t*(t-1))").unwrap().scale(&th.k());
    assert_eq!(at_mu0, expect);
}

#[test]
fn elimination_oracle_point() {
    let (lhs, rhs) = eliminate_mu(&theta_x()).unwrap();
    let env: BTreeMap<Var, Rational> =
        [(Var::Lambda, int(2)), (Var::V, int(1)), (Var::T, int(3))].into_iter().collect();
    let l = lhs.eval_all(&env).unwrap();
    assert_eq!(l, rat(35, 144));
    assert_eq!(l, rhs.eval_all(&env).unwrap());
}

#[test]
fn elimination_matches_pvi_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut draw = || rat(rng.gen_range(-40..=40), rng.gen_range(1..=9));
    let mut thetas = vec![theta_x(), theta_y()];
    thetas.extend((0..20).map(|_| theta([draw(), draw(), draw(), draw()])));
    let report = garnier_to_pvi_check(&thetas, 200, 2024).unwrap();
    assert!(report.pass, "{:?}", report.outcomes.iter().find(|o| o.mismatch.is_some()));
    assert_eq!(report.outcomes.len(), 22);
    assert!(report.outcomes.iter().all(|o| o.samples >= 200 && o.samples > o.degree_bound));
    assert!(report.miss_log10() < -100.0);
}

#[test]
fn elimination_detects_wrong_hamiltonian_parameters() {
    // same K, compared against P_VI with θ0 and θ1 exchanged
    let th = theta([rat(1, 3), rat(2, 5), rat(-3, 7), rat(5, 4)]);
    let (lhs, _) = eliminate_mu(&th).unwrap();
    let swapped = theta([rat(2, 5), rat(1, 3), rat(-3, 7), rat(5, 4)]);
    let (_, rhs) = eliminate_mu(&swapped).unwrap();
    assert_ne!(lhs, rhs);
}

fn curve_from(kind: FormKind) -> (AlgebraicSolution, Theta) {
    let p = extract_e_theta_params(&lemma_coefficients(kind)).unwrap();
    let sol = AlgebraicSolution::new(p.lambda.clone(), p.t.clone()).with_mu(p.mu.clone());
    (sol, p.theta)
}

#[test]
fn x_equation_curve_solves_garnier() {
    let (sol, th) = curve_from(FormKind::First);
    assert_eq!(th, theta_x());
    assert_eq!(sol.lambda, AlgebraicSolution::eq1().lambda);
    let mu = parse_ratexpr("(2*a-1)*(a^2-a+1)/(12*a^2*(a-1)^2)").unwrap();
    assert_eq!(sol.mu.as_ref(), Some(&mu));
    let (r1, r2) = verify_garnier_on_curve(&sol, &th).unwrap();
    assert!(r1.is_zero() && r2.is_zero());
}

#[test]
fn y_equation_curve_solves_garnier() {
    let (sol, th) = curve_from(FormKind::Second);
    assert_eq!(sol.lambda, AlgebraicSolution::eq2().lambda);
    let mu = parse_ratexpr("(a^2-7*a+1)/(12*a*(a-2)*(a-1)^2)").unwrap();
    assert_eq!(sol.mu.as_ref(), Some(&mu));
    for th in [th, theta_y()] {
        let (r1, r2) = verify_garnier_on_curve(&sol, &th).unwrap();
        assert!(r1.is_zero() && r2.is_zero(), "{}", describe_theta(&th));
    }
}

#[test]
fn perturbed_theta_breaks_garnier() {
    let (sol, _) = curve_from(FormKind::First);
    let th = theta([int(0), int(0), int(0), rat(1, 3)]);
    let (r1, r2) = verify_garnier_on_curve(&sol, &th).unwrap();
    assert!(!(r1.is_zero() && r2.is_zero()));
    assert!(verify_garnier_on_curve(&AlgebraicSolution::eq1(), &theta_x()).is_err());
}

#[test]
fn exclusion_sets() {
    let ex = degenerate_parameters(&AlgebraicSolution::eq1()).unwrap();
    assert_eq!(ex.rational, vec![int(-1), int(0), rat(1, 2), int(1), int(2)]);
    for a in [rat(1, 2), int(0), int(1), int(2), int(-1)] {
        assert!(ex.contains(&a));
    }
    assert!(!ex.contains(&int(3)));
    assert!(ex.factors.contains(&painleve_core::algebra::parse_poly("a^2-a+1").unwrap()));
    let ex2 = degenerate_parameters(&AlgebraicSolution::eq2()).unwrap();
    assert!(ex2.factors.contains(&painleve_core::algebra::parse_poly("a^2-7*a+1").unwrap()));
    assert!(!ex2.contains(&int(3)));
}

#[test]
fn curves_are_valid() {
    for sol in [AlgebraicSolution::eq1(), AlgebraicSolution::eq2()] {
        sol.validate().unwrap();
    }
    let flat = AlgebraicSolution::new(RatExpr::var(Var::A), RatExpr::int(3));
    assert!(pvi_residual_on_curve(&flat, &PVIParams::pencil(), PVIVariant::Standard).is_err());
}

#[test]
fn mobius_reparameterization_keeps_verdicts() {
    let m = parse_ratexpr("(2*a+1)/(a+3)").unwrap();
    let e1 = AlgebraicSolution::eq1().reparameterize(&m).unwrap();
    let e2 = AlgebraicSolution::eq2().reparameterize(&m).unwrap();
    assert!(residual(&e1, &PVIParams::pencil(), PVIVariant::Standard).is_zero());
    assert!(residual(&e2, &alpha_from_theta(&theta_y()), PVIVariant::Standard).is_zero());
    assert!(bracket_identity_check(&e1).unwrap().is_zero());
    assert!(!bracket_identity_check(&e2).unwrap().is_zero());
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=8).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn alpha_is_even(t0 in small_rat(), t1 in small_rat(), tt in small_rat(), ti in small_rat()) {
        let a = alpha_from_theta(&theta([t0.clone(), t1.clone(), tt.clone(), ti.clone()]));
        let b = alpha_from_theta(&theta([-t0, -t1, -tt, -ti]));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn residual_is_affine_in_sigma(c in proptest::array::uniform4(small_rat()), s in proptest::array::uniform4(small_rat())) {
        let p = PVIParams::new(core::array::from_fn(|i| Affine::new(c[i].clone(), s[i].clone())));
        let r = residual(&AlgebraicSolution::eq2(), &p, PVIVariant::Standard);
        prop_assert!(pencil_decompose(&r).is_ok());
        prop_assert_eq!(PVIParams::from_classical(p.classical()), p);
    }
}

#[test]
fn bracket_terms_at_three() {
    let t = bracket_terms(&AlgebraicSolution::eq1(), &int(3)).unwrap();
    assert_eq!(t, [rat(49, 15), rat(-49, 40), rat(-49, 24)]);
    assert!(bracket_terms(&AlgebraicSolution::eq1(), &int(1)).is_err());
}

#[test]
fn sampled_parameters_are_reproducible() {
    assert_eq!(sample_thetas(5, 3), sample_thetas(5, 3));
    assert_ne!(sample_thetas(5, 3), sample_thetas(5, 4));
}
