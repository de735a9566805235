//! Roots of a polynomial in one variable that lie in the coefficient field,
//! for coefficients in ℚ or ℚ(p) with a single parameter `p`.
//!
//! A rational specialization `p = p*` is chosen, rational roots of the
//! specialized polynomial are found from floating-point approximations and
//! checked exactly, each one is lifted to a power series in `p - p*`, and a
//! rational function is recovered from the series by Padé approximation.
//! Every candidate is verified by exact substitution.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gcd::squarefree_part;
use super::poly::Poly;
use super::ratexpr::RatExpr;
use super::rational::{int, rat, to_f64, Rational};
use super::upoly::UPoly;
use super::var::Var;
use super::AlgebraError;
use crate::numeric::real_poly_roots;

/// Distinct roots of `p` (as a polynomial in `v`) with their multiplicities.
///
/// Fails with [`AlgebraError::IrreducibleFactor`] if a factor of degree ≥ 2
/// without roots in the coefficient field remains.
pub fn linear_roots(p: &Poly, v: Var) -> Result<Vec<(RatExpr, usize)>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::DivisionByZero("roots of the zero polynomial".into()));
    }
    let params: Vec<Var> = p.vars().into_iter().filter(|&x| x != v).collect();
    if params.len() > 1 {
        return Err(AlgebraError::UnsupportedCoefficients(format!(
            "roots need at most one parameter, found {}",
            params.len()
        )));
    }
    let sqf = squarefree_part(p, v);
    let candidates = match params.first() {
        None => {
            let coeffs = sqf.as_univariate(v).expect("univariate");
            rational_roots(&coeffs)
                .into_iter()
                .map(RatExpr::constant)
                .collect()
        }
        Some(&param) => parametric_roots(&sqf, v, param)?,
    };

    let mut rest = UPoly::from_poly(p, v);
    let mut out = Vec::new();
    for r in candidates {
        let m = rest.root_multiplicity(&r);
        if m == 0 {
            continue;
        }
        let lin = UPoly::linear_root(&r).pow(m as u32);
        rest = rest.div_exact(&lin).expect("exact deflation");
        out.push((r, m));
    }
    match rest.degree() {
        Some(0) | None => Ok(out),
        Some(1) => {
            let c = rest.coeffs();
            let r = -&c[0].checked_div(&c[1])?;
            out.push((r, 1));
            Ok(out)
        }
        Some(_) => Err(AlgebraError::IrreducibleFactor(format!(
            "{}",
            rest.to_ratexpr(v)
        ))),
    }
}

fn horner_q(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Rational roots of a univariate polynomial over ℚ, without multiplicity,
/// in ascending order.
pub fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    let mut out = Vec::new();
    if c.len() <= 1 {
        return out;
    }
    if c[0].is_zero() {
        out.push(Rational::zero());
        let k = c.iter().position(|x| !x.is_zero()).unwrap();
        c.drain(..k);
    }
    // integer primitive form
    let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let lc = ints.last().unwrap().abs();

    let scale = c.iter().map(|x| to_f64(x).abs()).fold(0.0, f64::max);
    let approx: Vec<f64> = c.iter().map(|x| to_f64(x) / scale).collect();
    let Ok(zs) = real_poly_roots(&approx) else {
        return out;
    };
    let divisors = small_divisors(&lc);
    for z in zs {
        if z.im.abs() > 1e-6 * z.re.abs().max(1.0) {
            continue;
        }
        let mut tried: Vec<Rational> = Vec::new();
        if let Some(ds) = &divisors {
            for q in ds {
                let qf = q.to_f64().unwrap_or(f64::INFINITY);
                let p = num_traits::Float::round(z.re * qf);
                if !p.is_finite() || p.abs() > 9.0e15 {
                    continue;
                }
                tried.push(Rational::new(BigInt::from(p as i64), q.clone()));
            }
        }
        tried.extend(convergents(z.re));
        for cand in tried {
            if !out.contains(&cand) && horner_q(&c, &cand).is_zero() {
                out.push(cand);
                break;
            }
        }
    }
    out.sort();
    out
}

/// Positive divisors of `n`, when `n` factors by trial division up to 10⁶.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.to_u128()?;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut d = 2u128;
    while d * d <= m && d <= 1_000_000 {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        if m > 1_000_000u128 * 1_000_000 {
            return None;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![1u128];
    for (p, e) in primes {
        let mut next = Vec::new();
        for dv in &divs {
            let mut pk = 1u128;
            for _ in 0..=e {
                next.push(dv * pk);
                pk *= p;
            }
        }
        divs = next;
        if divs.len() > 4096 {
            return None;
        }
    }
    divs.sort();
    Some(divs.into_iter().map(BigInt::from).collect())
}

fn convergents(x: f64) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut y = x;
    for _ in 0..40 {
        let a = num_traits::Float::floor(y);
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2.abs() > 1_000_000_000_000 {
            break;
        }
        out.push(Rational::new(BigInt::from(h2), BigInt::from(k2)));
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = y - a;
        if frac.abs() < 1e-14 {
            break;
        }
        y = 1.0 / frac;
    }
    out
}

const SPECIALIZATIONS: [(i64, i64); 16] = [
    (3, 1),
    (5, 1),
    (7, 1),
    (11, 1),
    (13, 1),
    (-3, 1),
    (4, 1),
    (6, 1),
    (1, 3),
    (2, 5),
    (-5, 2),
    (17, 1),
    (19, 3),
    (23, 1),
    (-7, 3),
    (29, 1),
];

fn parametric_roots(g: &Poly, v: Var, param: Var) -> Result<Vec<RatExpr>, AlgebraError> {
    let coeffs: Vec<Vec<Rational>> = g
        .coeffs_in(v)
        .iter()
        .map(|c| c.as_univariate(param).expect("coefficients in one parameter"))
        .collect();
    let deg_param = g.degree_in(param);
    let order = 2 * deg_param + 2;

    let upolys: Vec<UPoly<Rational>> = coeffs.iter().map(|c| UPoly::new(c.clone())).collect();
    let (point, special) = SPECIALIZATIONS
        .iter()
        .map(|&(n, d)| rat(n, d))
        .find_map(|pt| {
            let spec = UPoly::new(upolys.iter().map(|c| c.eval(&pt)).collect());
            let ok = spec.degree() == Some(upolys.len() - 1)
                && spec.gcd(&spec.derivative()).degree() == Some(0);
            ok.then_some((pt, spec))
        })
        .ok_or_else(|| {
            AlgebraError::UnsupportedCoefficients("no squarefree specialization found".into())
        })?;

    // coefficients as polynomials in ε = param - point
    let shifted: Vec<Vec<Rational>> = upolys
        .iter()
        .map(|c| {
            let mut s = c.taylor_shift(&point).coeffs().to_vec();
            s.resize(order, Rational::zero());
            s.truncate(order);
            s
        })
        .collect();
    let dspec = special.derivative();

    let mut out = Vec::new();
    for r0 in rational_roots(special.coeffs()) {
        let series = lift_root(&shifted, &r0, &dspec.eval(&r0), order);
        let Some((num, den)) = pade(&series, deg_param) else {
            continue;
        };
        let back = -&point;
        let to_poly = |u: &UPoly<Rational>| -> Poly {
            let c = u.taylor_shift(&back);
            Poly::from_coeffs_in(param, c.coeffs().iter().cloned().map(Poly::constant).collect())
        };
        let cand = RatExpr::new(to_poly(&num), to_poly(&den))?;
        if UPoly::from_poly(g, v).eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    Ok(out)
}

fn series_mul(x: &[Rational], y: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, xi) in x.iter().enumerate().take(n) {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate().take(n - i) {
            out[i + j] += xi * yj;
        }
    }
    out
}

/// Power-series root of `Σ_j c_j(ε) v^j` starting from the simple root `r0`.
fn lift_root(coeffs: &[Vec<Rational>], r0: &Rational, slope: &Rational, n: usize) -> Vec<Rational> {
    let mut r = vec![Rational::zero(); n];
    r[0] = r0.clone();
    for k in 1..n {
        let m = k + 1;
        let mut acc = vec![Rational::zero(); m];
        for c in coeffs.iter().rev() {
            acc = series_mul(&acc, &r[..m], m);
            for (a, ci) in acc.iter_mut().zip(c.iter()) {
                *a += ci;
            }
        }
        r[k] = -(&acc[k] / slope);
    }
    r
}

/// `(P, Q)` with `deg P, deg Q ≤ d`, `Q(0) ≠ 0` and `Q·series ≡ P`.
fn pade(series: &[Rational], d: usize) -> Option<(UPoly<Rational>, UPoly<Rational>)> {
    let n = series.len();
    let mut r0 = UPoly::monomial(int(1), n);
    let mut r1 = UPoly::new(series.to_vec());
    let mut t0: UPoly<Rational> = UPoly::zero();
    let mut t1: UPoly<Rational> = UPoly::constant(int(1));
    while r1.degree().is_some_and(|k| k > d) {
        let (q, rem) = r0.div_rem(&r1);
        let t2 = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if t1.coeff(0).is_zero() || t1.degree().is_some_and(|k| k > d) {
        return None;
    }
    Some((r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::{parse_poly, parse_ratexpr};

    fn roots_of(s: &str) -> Vec<(RatExpr, usize)> {
        linear_roots(&parse_poly(s).unwrap(), Var::S).unwrap()
    }

    #[test]
    fn rational_roots_over_q() {
        let r = roots_of("s*(s-1)*(5*s+27)*(7*s+9)");
        let got: Vec<_> = r.iter().map(|(x, _)| x.as_const().unwrap()).collect();
        assert_eq!(got, vec![rat(-27, 5), rat(-9, 7), int(0), int(1)]);
    }

    #[test]
    fn multiplicity_counted() {
        let r = roots_of("(s-2)^3*(3*s+1)");
        assert!(r.contains(&(RatExpr::int(2), 3)));
        assert!(r.contains(&(RatExpr::constant(rat(-1, 3)), 1)));
    }

    #[test]
    fn parametric_roots_recovered() {
        let p = parse_poly("s*(s-1)*((2*a-1)*s - a^3*(2-a))*((a^2-a+1)*s - a^2*(2-a))").unwrap();
        let r = linear_roots(&p, Var::S).unwrap();
        let t = parse_ratexpr("a^3*(2-a)/(2*a-1)").unwrap();
        let lam = parse_ratexpr("a^2*(2-a)/(a^2-a+1)").unwrap();
        assert_eq!(r.len(), 4);
        for x in [RatExpr::zero(), RatExpr::one(), t, lam] {
            assert!(r.contains(&(x, 1)));
        }
    }

    #[test]
    fn irreducible_factor_reported() {
        let p = parse_poly("(s-a)*(s^2 - a)").unwrap();
        let err = linear_roots(&p, Var::S).unwrap_err();
        assert!(matches!(err, AlgebraError::IrreducibleFactor(_)));
        let p = parse_poly("s^2 + 1").unwrap();
        assert!(linear_roots(&p, Var::S).is_err());
    }
}
