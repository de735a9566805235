//! One function per subcommand, each returning a finished report.

use std::collections::BTreeMap;

use num_complex::Complex64 as C;
use painleve_core::algebra::rational::{int, rat};
use painleve_core::algebra::{parse_ratexpr, Poly, RatExpr, Rational, Var};
use painleve_core::fuchs::{apparent_test, extract_e_theta_params, riemann_scheme, LinearODE2, Point, Theta, Verdict};
use painleve_core::garnier_pvi::{
    alpha_from_theta, bracket_identity_check, bracket_terms, describe_theta, garnier_to_pvi_check,
    pencil_decompose, pvi_residual_on_curve, sample_thetas, verify_garnier_on_curve, Affine,
    AlgebraicSolution, PVIParams, PVIVariant, SIGMA,
};
use painleve_core::periods::{
    numeric_pf_residual, numeric_pf_residual_with, period_integral, CyclePath, Fiber, MonodromySuite,
    NumericConfig, DEFAULT_PAIR,
};
use painleve_core::picard_fuchs::{derive_pf, lemma_coefficients, match_lemma, FormKind, FormSpec, QuarticFamily};
use painleve_core::{Error, NumericError};
use serde_json::{json, Value};

use crate::report::{Check, Report};
use crate::text::{complex_value, fmt_complex, fmt_f64, matrix_value};

/// Canonical text of an exact result, abbreviated when long.
fn summarize(x: &RatExpr) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let s = x.to_string();
    if s.len() <= 160 {
        return s;
    }
    let env: BTreeMap<Var, Rational> = [(Var::A, int(3)), (SIGMA, int(1))].into_iter().collect();
    match x.eval_all(&env) {
        Ok(v) => format!("nonzero ({} characters; {v} at a=3, sigma=1)", s.len()),
        Err(_) => format!("nonzero ({} characters)", s.len()),
    }
}

fn theta_x() -> Theta {
    Theta::new(int(0), int(0), int(0), rat(1, 2))
}

fn theta_y() -> Theta {
    Theta::new(int(1), int(0), int(0), rat(-1, 2))
}

fn config_inputs(r: &mut Report, cfg: &NumericConfig) {
    r.input("precision_bits", cfg.precision_bits);
    r.input("quadrature_tol", fmt_f64(cfg.quadrature_tol));
    r.input("scheme_tol", fmt_f64(cfg.scheme_tol));
    r.input("ode_tol", fmt_f64(cfg.ode_tol));
    r.input("report_tol", fmt_f64(cfg.report_tol));
    r.input("cauchy_radius_fraction", fmt_f64(cfg.cauchy_radius_fraction));
    r.input("cauchy_points", cfg.cauchy_points);
}

/// Turns a numerical failure into a failing check, keeping the inputs
/// already recorded.
fn settle(mut r: Report, res: Result<(), Error>) -> Result<Report, Error> {
    match res {
        Ok(()) => Ok(r),
        Err(Error::Numeric(e)) if !matches!(e, NumericError::CollidingRoots(_)) => {
            r.check(Check::exact("numerical computation", "completes", e.to_string(), false));
            Ok(r)
        }
        Err(e) => Err(e),
    }
}

fn solution(name: &str) -> Result<AlgebraicSolution, Error> {
    AlgebraicSolution::by_name(name).ok_or_else(|| Error::Structure(format!("unknown solution {name}")))
}

/// Four comma-separated entries, each affine in `sigma`.
pub fn parse_alpha(text: &str) -> Result<PVIParams, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Structure(format!("--alpha needs four entries, got {}", parts.len())));
    }
    let mut alpha = Vec::with_capacity(4);
    for p in parts {
        let e = parse_ratexpr(p)?;
        let (c, s) = pencil_decompose(&e)?;
        match (c.as_const(), s.as_const()) {
            (Some(c), Some(s)) => alpha.push(Affine::new(c, s)),
            _ => return Err(Error::Structure(format!("alpha entry {p:?} must be a + b*sigma with rational a, b"))),
        }
    }
    Ok(PVIParams::new(alpha.try_into().expect("four entries")))
}

pub fn verify_pvi(name: &str, alpha: Option<&str>, pencil: bool, variants: &[PVIVariant]) -> Result<Report, Error> {
    let sol = solution(name)?;
    let params = match (alpha, pencil) {
        (Some(a), _) => parse_alpha(a)?,
        (None, true) => PVIParams::pencil(),
        (None, false) if name == "eq2" => alpha_from_theta(&theta_y()),
        (None, false) => PVIParams::pencil(),
    };
    let mut r = Report::new("verify-pvi");
    r.input("solution", name);
    r.input("alpha", params.to_string());
    r.input("variant", if variants.len() == 2 { "both" } else { variants[0].name() });
    r.detail("lambda", sol.lambda.to_string());
    r.detail("t", sol.t.to_string());
    let mut vanishing = Vec::new();
    let mut per_variant = serde_json::Map::new();
    for &v in variants {
        let res = pvi_residual_on_curve(&sol, &params, v)?;
        let zero = res.is_zero();
        if zero {
            vanishing.push(v);
        }
        let mut entry = serde_json::Map::new();
        entry.insert("denominator".into(), json!(v.denominator(&RatExpr::var(Var::T)).to_string()));
        entry.insert("vanishes".into(), json!(zero));
        if params.is_constant() {
            entry.insert("residual".into(), json!(summarize(&res)));
        } else {
            let (r0, r1) = pencil_decompose(&res)?;
            entry.insert("R0".into(), json!(summarize(&r0)));
            entry.insert("R1".into(), json!(summarize(&r1)));
        }
        per_variant.insert(v.name().into(), Value::Object(entry.clone()));
        if variants.len() == 1 {
            if params.is_constant() {
                r.check(Check::exact("residual", "0", summarize(&res), zero));
            } else {
                let (r0, r1) = pencil_decompose(&res)?;
                r.check(Check::exact("R0 (sigma-free part)", "0", summarize(&r0), r0.is_zero()));
                r.check(Check::exact("R1 (coefficient of sigma)", "0", summarize(&r1), r1.is_zero()));
            }
        }
    }
    r.detail("variants", Value::Object(per_variant));
    if variants.len() == 2 {
        r.check(Check::exact(
            "standard denominator gives a zero residual",
            true,
            vanishing.contains(&PVIVariant::Standard),
            vanishing.contains(&PVIVariant::Standard),
        ));
        r.check(Check::exact(
            "exactly one denominator gives a zero residual",
            1,
            vanishing.len(),
            vanishing.len() == 1,
        ));
    }
    for v in &vanishing {
        r.note(format!("denominator {} ({}) gives the zero residual", v.denominator(&RatExpr::var(Var::T)), v.name()));
    }
    Ok(r)
}

pub fn bracket_check(name: &str, at: &Rational) -> Result<Report, Error> {
    let sol = solution(name)?;
    let mut r = Report::new("bracket-check");
    r.input("solution", name);
    r.input("at_a", at.to_string());
    let b = bracket_identity_check(&sol)?;
    r.check(Check::exact("bracket vanishes identically in a", "0", summarize(&b), b.is_zero()));
    let terms = bracket_terms(&sol, at)?;
    let sum: Rational = terms.iter().sum();
    r.detail("terms", terms.iter().map(|t| t.to_string()).collect::<Vec<_>>());
    r.check(Check::exact(format!("bracket terms at a={at} add to zero"), "0", sum.to_string(), sum == int(0)));
    Ok(r)
}

pub fn garnier_check(samples: usize, seed: u64, random: usize) -> Result<Report, Error> {
    let mut thetas = vec![theta_x(), theta_y()];
    thetas.extend(sample_thetas(random, seed.wrapping_add(1)));
    let rep = garnier_to_pvi_check(&thetas, samples, seed)?;
    let mut r = Report::new("garnier-check");
    r.seed = Some(seed);
    r.input("samples", samples);
    r.input("random_thetas", random);
    r.input("seed", seed);
    for o in &rep.outcomes {
        let name = describe_theta(&o.theta);
        let got = match &o.mismatch {
            None => format!("{} samples agree", o.samples),
            Some(w) => format!(
                "mismatch at (lambda, lambda', t) = ({}, {}, {}): {} vs {}",
                w.point[0], w.point[1], w.point[2], w.lhs, w.rhs
            ),
        };
        r.check(Check::exact(format!("{name}: eliminated system equals P_VI"), "all samples agree", got, o.mismatch.is_none()));
        r.check(Check::exact(
            format!("{name}: samples exceed the degree bound"),
            format!("> {}", o.degree_bound),
            o.samples,
            o.samples > o.degree_bound,
        ));
    }
    r.detail("grid_size", rep.grid_size);
    r.detail("miss_probability_log10", fmt_f64(rep.miss_log10()));
    Ok(r)
}

pub fn derive(kind: FormKind, match_reference: bool) -> Result<Report, Error> {
    let fam = QuarticFamily::symbolic();
    let mut r = Report::new("derive-pf");
    r.input("form", kind.name());
    r.input("match_lemma", match_reference);
    let d = match derive_pf(&fam, &FormSpec::of_kind(&fam, kind)) {
        Ok(d) => d,
        Err(Error::Structure(msg)) => {
            r.check(Check::exact("rank of the reduced classes", 2, msg, false));
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.check(Check::exact("rank of the reduced classes", 2, d.rank, d.rank == 2));
    r.detail("a0", d.ode.a0().to_string());
    r.detail("a1", d.ode.a1().to_string());
    r.detail("a2", d.ode.a2().to_string());
    if match_reference {
        match match_lemma(&d.ode, &lemma_coefficients(kind)) {
            Ok(c) => {
                let constant = c.as_const().is_some();
                r.check(Check::exact("proportional to the reference equation", "constant factor", c.to_string(), constant));
            }
            Err(e) => r.check(Check::exact("proportional to the reference equation", "constant factor", e.to_string(), false)),
        }
    }
    Ok(r)
}

fn reference_ode(kind: FormKind, at: Option<&Rational>) -> Result<LinearODE2, Error> {
    let e = lemma_coefficients(kind);
    match at {
        Some(a) => e.specialize(Var::A, &Poly::constant(a.clone())),
        None => Ok(e),
    }
}

fn at_a(x: RatExpr, at: Option<&Rational>) -> Result<RatExpr, Error> {
    match at {
        Some(a) => Ok(x.substitute_one(Var::A, &RatExpr::constant(a.clone()))?),
        None => Ok(x),
    }
}

fn reference_lambda(kind: FormKind) -> RatExpr {
    match kind {
        FormKind::First => AlgebraicSolution::eq1().lambda,
        FormKind::Second => AlgebraicSolution::eq2().lambda,
    }
}

pub fn scheme(kind: FormKind, at: Option<&Rational>) -> Result<Report, Error> {
    let ode = reference_ode(kind, at)?;
    let sch = riemann_scheme(&ode)?;
    let mut r = Report::new("scheme");
    r.input("kind", kind.name());
    r.input("at_a", at.map(|a| a.to_string()).unwrap_or_else(|| "symbolic".into()));
    let q = |n: i64, d: i64| rat(n, d);
    let (zero_exp, inf_exp) = match kind {
        FormKind::First => ((q(0, 1), q(0, 1)), (q(1, 4), q(3, 4))),
        FormKind::Second => ((q(0, 1), q(1, 1)), (q(-1, 4), q(1, 4))),
    };
    let lambda = Point::Finite(at_a(reference_lambda(kind), at)?);
    let expected = [
        (Point::Finite(RatExpr::zero()), zero_exp),
        (Point::Finite(RatExpr::one()), (q(0, 1), q(0, 1))),
        (Point::Finite(at_a(AlgebraicSolution::t_of_a(), at)?), (q(0, 1), q(0, 1))),
        (lambda.clone(), (q(0, 1), q(2, 1))),
        (Point::Infinity, inf_exp),
    ];
    let show = |e: &(Rational, Rational)| format!("{{{}, {}}}", e.0, e.1);
    for (p, e) in &expected {
        let got = sch.entry(p).map(|x| show(&x.exponents)).unwrap_or_else(|| "not singular".into());
        r.check(Check::exact(format!("exponents at {p}"), show(e), got.clone(), got == show(e)));
    }
    r.check(Check::exact("number of singular points", expected.len(), sch.entries.len(), sch.entries.len() == expected.len()));
    let sum = sch.fuchs_sum();
    r.check(Check::exact("Fuchs relation: sum of exponents", "3", sum.to_string(), sum == int(3)));
    let apparent: Vec<String> = sch.apparent_points().iter().map(|p| p.to_string()).collect();
    r.check(Check::exact("apparent points", vec![lambda.to_string()], apparent.clone(), apparent == vec![lambda.to_string()]));
    r.detail("table", sch.to_string().lines().map(String::from).collect::<Vec<_>>());
    Ok(r)
}

pub fn apparent(kinds: &[FormKind]) -> Result<Report, Error> {
    let mut r = Report::new("apparent-test");
    r.input("kind", if kinds.len() == 2 { "both" } else { kinds[0].name() });
    for &kind in kinds {
        let ode = lemma_coefficients(kind);
        let mut points = vec![(Point::Finite(reference_lambda(kind)), Verdict::Apparent)];
        if kind == FormKind::Second {
            points.push((Point::Finite(RatExpr::zero()), Verdict::Logarithmic));
        }
        for (p, want) in points {
            let c = apparent_test(&ode, &p)?;
            let name = |v: Verdict| match v {
                Verdict::Apparent => "apparent",
                Verdict::Logarithmic => "logarithmic",
            };
            r.check(Check::exact(
                format!("{} equation at s = {p}", kind.name()),
                name(want),
                format!("{} (obstruction {})", name(c.verdict), summarize(&c.obstruction)),
                c.verdict == want,
            ));
        }
    }
    Ok(r)
}

pub fn extract(kinds: &[FormKind]) -> Result<Report, Error> {
    let mut r = Report::new("extract-params");
    r.input("kind", if kinds.len() == 2 { "both" } else { kinds[0].name() });
    for &kind in kinds {
        let p = extract_e_theta_params(&lemma_coefficients(kind))?;
        let k = kind.name();
        // θ∞ is reported as a non-negative exponent difference
        let want = match kind {
            FormKind::First => theta_x(),
            FormKind::Second => Theta::new(int(1), int(0), int(0), rat(1, 2)),
        };
        r.check(Check::exact(format!("{k}: theta"), describe_theta(&want), describe_theta(&p.theta), p.theta == want));
        let lam = reference_lambda(kind);
        r.check(Check::exact(format!("{k}: lambda"), lam.to_string(), p.lambda.to_string(), p.lambda == lam));
        let t = AlgebraicSolution::t_of_a();
        r.check(Check::exact(format!("{k}: t"), t.to_string(), p.t.to_string(), p.t == t));
        r.check(Check::exact(format!("{k}: k matches theta"), true, p.k_consistent, p.k_consistent));
        r.check(Check::exact(format!("{k}: exponent relation"), true, p.exponent_relation, p.exponent_relation));
        let sol = AlgebraicSolution::new(p.lambda.clone(), p.t.clone()).with_mu(p.mu.clone());
        let (g1, g2) = verify_garnier_on_curve(&sol, &p.theta)?;
        r.check(Check::exact(format!("{k}: d lambda/dt = dK/dmu on the curve"), "0", summarize(&g1), g1.is_zero()));
        r.check(Check::exact(format!("{k}: d mu/dt = -dK/dlambda on the curve"), "0", summarize(&g2), g2.is_zero()));
        r.detail(&format!("{k}_mu"), p.mu.to_string());
        r.detail(&format!("{k}_k"), p.k.to_string());
        r.detail(&format!("{k}_alpha_inf"), p.alpha_inf.to_string());
    }
    Ok(r)
}

fn suite_value(s: &MonodromySuite) -> Value {
    let loops: Vec<Value> = s
        .loops
        .iter()
        .map(|l| {
            json!({
                "loop": l.name,
                "point": l.point.as_ref().map(|p| p.to_string()),
                "matrix": matrix_value(&l.matrix.m),
                "trace": fmt_complex(l.matrix.trace),
                "det": fmt_complex(l.matrix.det),
                "distance_to_identity": fmt_f64(l.matrix.distance_to_identity),
                "expected": l.expected.name(),
                "pass": l.pass,
            })
        })
        .collect();
    Value::from(loops)
}

pub fn monodromy(a: &Rational, kind: FormKind, compare: Option<&Rational>, cfg: &NumericConfig) -> Result<Report, Error> {
    let mut r = Report::new("monodromy-suite");
    r.input("a", a.to_string());
    r.input("kind", kind.name());
    r.input("compare_a", compare.map(|c| c.to_string()));
    config_inputs(&mut r, cfg);
    let res = monodromy_checks(&mut r, a, kind, compare, cfg);
    settle(r, res)
}

fn monodromy_checks(
    r: &mut Report,
    a: &Rational,
    kind: FormKind,
    compare: Option<&Rational>,
    cfg: &NumericConfig,
) -> Result<(), Error> {
    let suite = painleve_core::periods::monodromy_suite(a, kind, cfg)?;
    let tol = cfg.report_tol;
    for l in &suite.loops {
        let m = &l.matrix;
        r.check(Check {
            name: format!("loop {}", l.name),
            expected: Value::from(l.expected.name()),
            got: Value::from(format!(
                "trace {}, det {}, |M - I| {}",
                fmt_complex(m.trace),
                fmt_complex(m.det),
                fmt_f64(m.distance_to_identity)
            )),
            tolerance: Value::from(fmt_f64(tol)),
            pass: l.pass,
        });
    }
    r.check(Check::at_most("product relation defect", suite.product.residual, tol));
    r.detail("base_point", complex_value(suite.base));
    r.detail("loops", suite_value(&suite));
    r.detail(
        "product_order",
        format!("X_infinity * {}", suite.product.order.iter().rev().map(|n| format!("X_{n}")).collect::<Vec<_>>().join(" * ")),
    );
    r.detail(
        "adjacent_traces",
        suite.adjacent_traces.iter().map(|(n, t)| json!({ "product": n, "trace": fmt_complex(*t) })).collect::<Vec<_>>(),
    );
    r.note("loops are based at s = -i, finite loops counter-clockwise, the loop around infinity clockwise");
    r.note("X_(gamma then delta) = X_delta X_gamma; finite loops ordered by increasing arg(p - base)");
    if let Some(b) = compare {
        let other = painleve_core::periods::monodromy_suite(b, kind, cfg)?;
        let same_order = other.product.order == suite.product.order;
        r.check(Check::exact("loop order agrees", suite.product.order.join(","), other.product.order.join(","), same_order));
        for ((n, x), (_, y)) in suite.invariants().iter().zip(other.invariants()) {
            r.check(Check::at_most(format!("trace of {n} at a={a} vs a={b}"), (x - y).norm(), tol));
        }
    }
    Ok(())
}

pub fn period(a: &Rational, s: C, kind: FormKind, pair: (usize, usize), cfg: &NumericConfig) -> Result<Report, Error> {
    let mut r = Report::new("period");
    r.input("a", a.to_string());
    r.input("s", fmt_complex(s));
    r.input("form", kind.name());
    r.input("pair", vec![pair.0, pair.1]);
    config_inputs(&mut r, cfg);
    let res = period_checks(&mut r, a, s, kind, pair, cfg);
    settle(r, res)
}

fn period_checks(
    r: &mut Report,
    a: &Rational,
    s: C,
    kind: FormKind,
    pair: (usize, usize),
    cfg: &NumericConfig,
) -> Result<(), Error> {
    let fiber = Fiber::new(a)?;
    let roots = fiber.branch_points(s)?;
    let worst = roots.iter().map(|e| (fiber.q(*e) - s).norm()).fold(0.0, f64::max);
    r.check(Check::at_most("branch point residual |Q(e) - s|", worst, 1e-12 * s.norm().max(1.0)));
    r.detail("branch_points", roots.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>());
    let p = period_integral(a, s, kind, &CyclePath::straight(pair.0, pair.1), cfg)?;
    r.check(Check::at_most("agreement of the two quadrature schemes", p.delta, cfg.scheme_tol));
    r.detail("period", fmt_complex(p.value));
    r.detail("gauss_legendre", fmt_complex(p.gauss));
    r.detail("tanh_sinh", fmt_complex(p.tanh_sinh));
    r.detail("eta_at_chord_midpoint", fmt_complex(p.anchor));
    Ok(())
}

pub fn pf_residual(a: &Rational, grid: &[C], kinds: &[FormKind], tol: f64, cfg: &NumericConfig) -> Result<Report, Error> {
    let mut r = Report::new("pf-residual");
    r.input("a", a.to_string());
    r.input("grid", grid.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>());
    r.input("tolerance", fmt_f64(tol));
    r.input("pair", vec![DEFAULT_PAIR.0, DEFAULT_PAIR.1]);
    config_inputs(&mut r, cfg);
    let res = pf_checks(&mut r, a, grid, kinds, tol, cfg);
    settle(r, res)
}

fn pf_checks(
    r: &mut Report,
    a: &Rational,
    grid: &[C],
    kinds: &[FormKind],
    tol: f64,
    cfg: &NumericConfig,
) -> Result<(), Error> {
    let mut worst: f64 = 0.0;
    for &kind in kinds {
        let res = numeric_pf_residual(a, grid, kind, cfg)?;
        worst = worst.max(res.max);
        r.check(Check::at_most(format!("{} periods in their equation", kind.name()), res.max, tol));
        r.detail(
            &format!("{}_points", kind.name()),
            res.points
                .iter()
                .map(|(s, x, e)| json!({ "s": fmt_complex(*s), "period": fmt_complex(*x), "residual": fmt_f64(*e) }))
                .collect::<Vec<_>>(),
        );
    }
    let control = numeric_pf_residual_with(
        a,
        grid,
        FormKind::First,
        &lemma_coefficients(FormKind::Second),
        DEFAULT_PAIR,
        cfg,
    )?;
    let ratio = control.max / worst.max(f64::MIN_POSITIVE);
    r.check(Check {
        name: "first-kind periods in the second-kind equation (control)".into(),
        expected: Value::from(">= 1e3 times the largest residual above"),
        got: Value::from(fmt_f64(control.max)),
        tolerance: Value::from("1e3"),
        pass: ratio >= 1e3,
    });
    Ok(())
}
