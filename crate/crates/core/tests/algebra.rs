use std::collections::BTreeMap;

use painleve_core::algebra::rational::{int, rat};
use painleve_core::algebra::*;
use proptest::prelude::*;

const VARS: [Var; 3] = [Var::A, Var::T, Var::S];

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -6i64..7, 1i64..4), 0..5).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|((i, j, k), n, d)| {
            let mono: BTreeMap<Var, u32> = VARS
                .iter()
                .zip([i, j, k])
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| (*v, e))
                .collect();
            (mono, rat(n, d))
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratexpr() -> impl Strategy<Value = RatExpr> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatExpr::new(n, d).unwrap())
}

fn small_ratexpr() -> impl Strategy<Value = RatExpr> {
    let small = |n| {
        prop::collection::vec(((0u32..2, 0u32..2), -4i64..5), 1..n).prop_map(|terms| {
            Poly::from_terms(terms.into_iter().map(|((i, k), c)| {
                let mono: BTreeMap<Var, u32> =
                    [(Var::A, i), (Var::S, k)].into_iter().filter(|(_, e)| *e > 0).collect();
                (mono, int(c))
            }))
        })
    };
    (small(4), small(3).prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| RatExpr::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = BTreeMap<Var, Rational>> {
    prop::collection::vec((-9i64..10, 1i64..5), 3)
        .prop_map(|v| VARS.iter().zip(v).map(|(x, (n, d))| (*x, rat(n, d))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn gcd_divides_and_absorbs_common_factor(p in nonzero_poly(), q in nonzero_poly(), r in nonzero_poly()) {
        let (pr, qr) = (&p * &r, &q * &r);
        let g = gcd(&pr, &qr);
        prop_assert!(pr.div_exact(&g).is_some());
        prop_assert!(qr.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&r).is_some());
    }

    #[test]
    fn ratexpr_is_canonical(x in ratexpr(), y in ratexpr(), k in nonzero_poly()) {
        let scaled = RatExpr::new(x.num() * &k, x.den() * &k).unwrap();
        prop_assert_eq!(&scaled, &x);
        prop_assert!((&(&x + &y) - &(&y + &x)).is_zero());
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x);
        }
    }

    #[test]
    fn text_round_trip(x in ratexpr()) {
        prop_assert_eq!(parse_ratexpr(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn leibniz_rule(x in small_ratexpr(), y in small_ratexpr()) {
        for v in [Var::A, Var::S] {
            let lhs = (&x * &y).differentiate(v);
            let rhs = &(&x.differentiate(v) * &y) + &(&x * &y.differentiate(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(x in ratexpr(), y in ratexpr(), at in point()) {
        if let (Ok(ex), Ok(ey)) = (x.eval_all(&at), y.eval_all(&at)) {
            prop_assert_eq!((&x * &y).eval_all(&at).unwrap(), &ex * &ey);
            prop_assert_eq!((&x + &y).eval_all(&at).unwrap(), ex + ey);
        }
    }

    #[test]
    fn partial_fractions_recombine(
        poles in prop::collection::btree_set(-8i64..9, 1..4),
        num in prop::collection::vec(-5i64..6, 1..5),
    ) {
        let s = RatExpr::var(Var::S);
        let den = poles.iter().fold(RatExpr::one(), |acc, p| &acc * &(&s - &RatExpr::int(*p)));
        let n = num.iter().rev().fold(RatExpr::zero(), |acc, c| &(&acc * &s) + &RatExpr::int(*c));
        let f = &n / &den;
        let at: Vec<RatExpr> = poles.iter().map(|p| RatExpr::int(*p)).collect();
        let pf = partial_fractions(&f, Var::S, &at).unwrap();
        prop_assert_eq!(pf.recombine(Var::S), f.clone());
        for p in &at {
            prop_assert_eq!(pf.residue_at(p).unwrap(), &residue_at(&f, Var::S, p).unwrap());
        }
    }
}

#[test]
fn derivative_of_the_critical_value() {
    let t = parse_ratexpr("-a^3*(a-2)/(2*a-1)").unwrap();
    let want = parse_ratexpr("-6*a^2*(a-1)^2/(2*a-1)^2").unwrap();
    assert_eq!(t.differentiate(Var::A), want);
    let at3: BTreeMap<Var, Rational> = [(Var::A, int(3))].into_iter().collect();
    assert_eq!(t.eval_all(&at3).unwrap(), rat(-27, 5));
}

#[test]
fn typographic_minus_is_accepted() {
    assert_eq!(parse_ratexpr("−9/7").unwrap(), RatExpr::constant(rat(-9, 7)));
    assert_eq!(RatExpr::constant(rat(-9, 7)).to_string(), "-9/7");
}

#[test]
fn evaluation_at_a_pole_is_an_error() {
    let x = parse_ratexpr("1/(a-3)").unwrap();
    let at3: BTreeMap<Var, Rational> = [(Var::A, int(3))].into_iter().collect();
    assert!(x.eval_all(&at3).is_err());
}

#[test]
fn roots_over_the_field_of_a() {
    let p = parse_poly("(2*a-1)*s+a^3*(a-2)").unwrap();
    let p = &p * &parse_poly("s-1").unwrap();
    let mut roots: Vec<String> = linear_roots(&p, Var::S).unwrap().into_iter().map(|(r, m)| {
        assert_eq!(m, 1);
        r.to_string()
    }).collect();
    roots.sort();
    assert_eq!(roots.len(), 2);
    assert!(roots.contains(&"1".to_string()));
}
