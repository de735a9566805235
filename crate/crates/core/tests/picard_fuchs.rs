use painleve_core::algebra::{Poly, RatExpr};
use painleve_core::fuchs::LinearODE2;
use painleve_core::garnier_pvi::AlgebraicSolution;
use painleve_core::picard_fuchs::*;

fn derived(kind: FormKind, order: RuleOrder) -> DerivedPF {
    let fam = QuarticFamily::symbolic();
    derive_pf_with(&fam, &FormSpec::of_kind(&fam, kind), order).unwrap()
}

#[test]
fn first_kind_matches_reference_equation() {
    let d = derived(FormKind::First, RuleOrder::LevelFirst);
    assert_eq!(d.rank, 2);
    let c = match_lemma(&d.ode, &lemma_coefficients(FormKind::First)).unwrap();
    assert!(c.as_const().is_some(), "factor {c}");
}

#[test]
fn second_kind_matches_reference_equation() {
    let d = derived(FormKind::Second, RuleOrder::LevelFirst);
    let c = match_lemma(&d.ode, &lemma_coefficients(FormKind::Second)).unwrap();
    assert!(c.as_const().is_some(), "factor {c}");
}

#[test]
fn rule_orders_give_the_same_equation() {
    let x = derived(FormKind::First, RuleOrder::LevelFirst);
    let y = derived(FormKind::First, RuleOrder::DegreeFirst);
    assert_eq!(x.vectors, y.vectors);
    assert_eq!(x.ode, y.ode);
}

#[test]
fn cubic_second_kind_form_needs_third_order() {
    let fam = QuarticFamily::symbolic();
    let err = derive_pf(&fam, &FormSpec::cubic_second_kind(&fam)).unwrap_err();
    assert!(err.to_string().contains("third-order"), "{err}");
}

#[test]
fn specialized_derivation_matches_specialized_reference() {
    use painleve_core::algebra::rational::int;
    use painleve_core::algebra::Var;
    let fam = QuarticFamily::at(int(3)).unwrap();
    let d = derive_pf(&fam, &FormSpec::of_kind(&fam, FormKind::First)).unwrap();
    let e = lemma_coefficients(FormKind::First).specialize(Var::A, &Poly::int(3)).unwrap();
    assert!(match_lemma(&d.ode, &e).is_ok());
}

#[test]
fn reference_equations_are_not_proportional() {
    let x = lemma_coefficients(FormKind::First);
    let y = lemma_coefficients(FormKind::Second);
    assert!(match_lemma(&x, &y).is_err());
    assert_eq!(match_lemma(&x, &x).unwrap(), RatExpr::one());
}

#[test]
fn roots_give_the_algebraic_solutions() {
    let fam = QuarticFamily::symbolic();
    let s1 = solution_from_a0(&lemma_coefficients(FormKind::First), &fam).unwrap();
    let s2 = solution_from_a0(&lemma_coefficients(FormKind::Second), &fam).unwrap();
    let eq1 = AlgebraicSolution::eq1();
    let eq2 = AlgebraicSolution::eq2();
    assert_eq!((s1.lambda, s1.t), (eq1.lambda, eq1.t));
    assert_eq!((s2.lambda, s2.t), (eq2.lambda, eq2.t));
}

#[test]
fn wronskian_structure() {
    let fam = QuarticFamily::symbolic();
    for kind in [FormKind::First, FormKind::Second] {
        let r = wronskian_form_check(&lemma_coefficients(kind), &fam).unwrap();
        assert!(r.pass, "{:?}", r.notes);
        assert!(r.wronskian.is_some());
    }
    let e = lemma_coefficients(FormKind::First);
    let broken = LinearODE2::new(e.a0().clone(), e.a1() + &Poly::one(), e.a2().clone()).unwrap();
    assert!(!wronskian_form_check(&broken, &fam).unwrap().pass);
}
