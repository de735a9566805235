//! The normal form `E_θ(λ, μ, t)`: singular points `0, 1, t, λ, ∞`, with `λ`
//! apparent of exponents `{0, 2}`,
//!
//! ```text
//! p1 = (1-θ0)/s + (1-θ1)/(s-1) + (1-θt)/(s-t) - 1/(s-λ)
//! p2 = k/(s(s-1)) - t(t-1)H/(s(s-1)(s-t)) + λ(λ-1)μ/(s(s-1)(s-λ))
//! ```
//!
//! with `k = ((θ0+θ1+θt-1)² - θ∞²)/4` and `H` the Hamiltonian below.

use alloc::format;
use alloc::vec::Vec;

use super::local::{apparent_test, indicial_exponents, Verdict};
use super::{LinearODE2, Point, S};
use crate::algebra::rational::int;
use crate::algebra::{linear_roots, partial_fractions, residue_at, RatExpr, Rational};
use crate::error::Error;

/// Local exponent data at `0, 1, t, ∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Theta {
    pub theta0: Rational,
    pub theta1: Rational,
    pub thetat: Rational,
    pub thetainf: Rational,
}

impl Theta {
    pub fn new(theta0: Rational, theta1: Rational, thetat: Rational, thetainf: Rational) -> Self {
        Theta {
            theta0,
            theta1,
            thetat,
            thetainf,
        }
    }

    /// `k = ((θ0 + θ1 + θt − 1)² − θ∞²) / 4`.
    pub fn k(&self) -> Rational {
        let s = &self.theta0 + &self.theta1 + &self.thetat - int(1);
        (&s * &s - &self.thetainf * &self.thetainf) / int(4)
    }

    pub fn as_array(&self) -> [&Rational; 4] {
        [&self.theta0, &self.theta1, &self.thetat, &self.thetainf]
    }
}

fn c(q: &Rational) -> RatExpr {
    RatExpr::constant(q.clone())
}

/// `K = [λ(λ−1)(λ−t)μ² − {θ0(λ−1)(λ−t) + θ1λ(λ−t) + (θt−1)λ(λ−1)}μ + kλ] / (t(t−1))`.
pub fn okamoto_hamiltonian(theta: &Theta, lambda: &RatExpr, mu: &RatExpr, t: &RatExpr) -> RatExpr {
    let one = RatExpr::one();
    let l1 = lambda - &one;
    let lt = lambda - t;
    let cubic = &(&(lambda * &l1) * &lt) * &(mu * mu);
    let bracket = &(&(&c(&theta.theta0) * &(&l1 * &lt)) + &(&c(&theta.theta1) * &(lambda * &lt)))
        + &(&(&c(&theta.thetat) - &one) * &(lambda * &l1));
    let num = &(&cubic - &(&bracket * mu)) + &(&c(&theta.k()) * lambda);
    let den = t * &(t - &one);
    num.checked_div(&den).expect("t(t-1) nonzero")
}

fn distinct(pairs: &[(&RatExpr, &RatExpr, &str)]) -> Result<(), Error> {
    for (x, y, what) in pairs {
        if x == y {
            return Err(Error::Structure(format!("coincident singular points: {what}")));
        }
    }
    Ok(())
}

/// Cleared-denominator form of `x'' + p1 x' + p2 x = 0`.
///
/// The `p2` term uses `H = K − k/(t−1)`, which differs from `K` by a function
/// of `t` alone and so has the same Hamilton equations; with it `λ` is an
/// apparent singularity.
pub fn build_e_theta(
    theta: &Theta,
    lambda: &RatExpr,
    mu: &RatExpr,
    t: &RatExpr,
) -> Result<LinearODE2, Error> {
    let zero = RatExpr::zero();
    let one = RatExpr::one();
    distinct(&[
        (t, &zero, "t = 0"),
        (t, &one, "t = 1"),
        (lambda, &zero, "λ = 0"),
        (lambda, &one, "λ = 1"),
        (lambda, t, "λ = t"),
    ])?;
    let s = RatExpr::var(S);
    let s1 = &s - &one;
    let st = &s - t;
    let sl = &s - lambda;
    let inv = |x: &RatExpr| x.recip().expect("nonzero");
    let residue = |th: &Rational| &one - &c(th);

    let p1 = &(&(&(&residue(&theta.theta0) * &inv(&s)) + &(&residue(&theta.theta1) * &inv(&s1)))
        + &(&residue(&theta.thetat) * &inv(&st)))
        - &inv(&sl);

    let k = c(&theta.k());
    let h = &okamoto_hamiltonian(theta, lambda, mu, t) - &k.checked_div(&(t - &one))?;
    let ss1 = &s * &s1;
    let p2 = &(&(&k * &inv(&ss1)) - &(&(&(t * &(t - &one)) * &h) * &inv(&(&ss1 * &st))))
        + &(&(&(lambda * &(lambda - &one)) * mu) * &inv(&(&ss1 * &sl)));
    LinearODE2::from_ratexprs(&one, &p1, &p2)
}

/// Data recovered from an equation of the form `E_θ(λ, μ, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EThetaParams {
    /// `θ∞` is the larger minus the smaller exponent at `∞`.
    pub theta: Theta,
    pub lambda: RatExpr,
    pub t: RatExpr,
    pub mu: RatExpr,
    /// Polynomial part of `s(s−1)p2`.
    pub k: RatExpr,
    pub k_consistent: bool,
    /// Smaller exponent at `∞`.
    pub alpha_inf: Rational,
    /// `2α∞ + θ0 + θ1 + θt + θ∞ + n = 3` with `n = 2`.
    pub exponent_relation: bool,
}

fn constant_residue(r: &RatExpr, at: &str) -> Result<Rational, Error> {
    r.as_const()
        .ok_or_else(|| Error::Structure(format!("residue of p1 at {at} is not constant: {r}")))
}

/// Reads `θ, λ, t, μ` off an equation with four simple finite singular
/// points `0, 1, t, λ`, `λ` apparent with exponents `{0, 2}`.
pub fn extract_e_theta_params(ode: &LinearODE2) -> Result<EThetaParams, Error> {
    let roots = linear_roots(ode.a0(), S)?;
    if roots.len() != 4 || roots.iter().any(|(_, m)| *m != 1) {
        return Err(Error::Structure(format!(
            "expected four simple finite singular points, found {}",
            roots.len()
        )));
    }
    let zero = RatExpr::zero();
    let one = RatExpr::one();
    let pts: Vec<RatExpr> = roots.into_iter().map(|(r, _)| r).collect();
    if !pts.contains(&zero) || !pts.contains(&one) {
        return Err(Error::Structure("0 and 1 must be singular points".into()));
    }
    let p1 = partial_fractions(&ode.p1(), S, &pts)?;
    if !p1.polynomial_part.is_zero() {
        return Err(Error::Structure("p1 has a polynomial part".into()));
    }
    let res = |p: &RatExpr| p1.residue_at(p).cloned().expect("pole listed");

    let mut lambdas = Vec::new();
    for p in pts.iter().filter(|p| **p != zero && **p != one) {
        if res(p) != RatExpr::int(-1) {
            continue;
        }
        if let Ok(cert) = apparent_test(ode, &Point::Finite(p.clone())) {
            if cert.verdict == Verdict::Apparent && cert.n == 2 && cert.exponents.0 == int(0) {
                lambdas.push(p.clone());
            }
        }
    }
    let lambda = match lambdas.as_slice() {
        [l] => l.clone(),
        [] => return Err(Error::Structure("no apparent point with p1-residue -1".into())),
        _ => return Err(Error::Structure("several candidate apparent points".into())),
    };
    let t = pts
        .iter()
        .find(|p| **p != zero && **p != one && **p != lambda)
        .cloned()
        .expect("four points");

    let theta0 = int(1) - constant_residue(&res(&zero), "0")?;
    let theta1 = int(1) - constant_residue(&res(&one), "1")?;
    let thetat = int(1) - constant_residue(&res(&t), "t")?;

    let p2 = ode.p2();
    let mu = residue_at(&p2, S, &lambda)?;
    let s = RatExpr::var(S);
    let h = &(&s * &(&s - &one)) * &p2;
    let hp = partial_fractions(&h, S, &[zero.clone(), one.clone(), t.clone(), lambda.clone()])?;
    for (p, r) in &hp.terms[..2] {
        if !r.is_zero() {
            return Err(Error::Structure(format!("p2 has a double pole at {p}")));
        }
    }
    if hp.polynomial_part.degree().is_some_and(|d| d > 0) {
        return Err(Error::Structure("s(s-1)p2 is not bounded at infinity".into()));
    }
    let k = hp.polynomial_part.coeff(0);

    let (lo, hi) = indicial_exponents(ode, &Point::Infinity)?;
    let theta = Theta::new(theta0, theta1, thetat, &hi - &lo);
    let k_consistent = k == c(&theta.k());
    let sum: Rational = theta.as_array().into_iter().sum();
    let exponent_relation = &lo * int(2) + sum + int(2) == int(3);
    Ok(EThetaParams {
        theta,
        lambda,
        t,
        mu,
        k,
        k_consistent,
        alpha_inf: lo,
        exponent_relation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::Var;

    fn theta(a: Rational, b: Rational, c: Rational, d: Rational) -> Theta {
        Theta::new(a, b, c, d)
    }

    #[test]
    fn k_values() {
        assert_eq!(theta(int(0), int(0), int(0), rat(1, 2)).k(), rat(3, 16));
        assert_eq!(theta(int(1), int(0), int(0), rat(-1, 2)).k(), rat(-1, 16));
    }

    #[test]
    fn hamiltonian_at_zero_momentum() {
        let th = theta(rat(1, 3), int(2), rat(-1, 5), rat(1, 2));
        let (l, t) = (RatExpr::var(Var::Lambda), RatExpr::var(Var::T));
        let k = okamoto_hamiltonian(&th, &l, &RatExpr::zero(), &t);
        let expected = (&c(&th.k()) * &l).checked_div(&(&t * &(&t - &RatExpr::one()))).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn residue_at_zero_is_one_minus_theta0() {
        let th = theta(rat(2, 7), int(0), int(0), int(1));
        let (l, m, t) = (RatExpr::constant(rat(5, 3)), RatExpr::int(2), RatExpr::int(-4));
        let e = build_e_theta(&th, &l, &m, &t).unwrap();
        let r = residue_at(&e.p1(), S, &RatExpr::zero()).unwrap();
        assert_eq!(r, RatExpr::constant(rat(5, 7)));
    }

    #[test]
    fn symbolic_lambda_is_apparent() {
        let th = theta(rat(1, 3), rat(1, 5), rat(-2, 7), rat(3, 4));
        let (l, m, t) = (RatExpr::var(Var::Lambda), RatExpr::var(Var::Mu), RatExpr::var(Var::T));
        let e = build_e_theta(&th, &l, &m, &t).unwrap();
        let cert = apparent_test(&e, &Point::Finite(l)).unwrap();
        assert_eq!(cert.verdict, Verdict::Apparent);
    }

    #[test]
    fn coincident_points_rejected() {
        let th = theta(int(0), int(0), int(0), int(0));
        let one = RatExpr::one();
        assert!(build_e_theta(&th, &one, &one, &RatExpr::int(3)).is_err());
        assert!(build_e_theta(&th, &RatExpr::int(3), &one, &RatExpr::int(3)).is_err());
    }

    #[test]
    fn round_trip_at_rational_point() {
        let th = theta(rat(1, 3), rat(-2, 5), rat(3, 7), rat(5, 4));
        let (l, m, t) = (RatExpr::constant(rat(-9, 7)), RatExpr::constant(rat(2, 11)), RatExpr::constant(rat(-27, 5)));
        let e = build_e_theta(&th, &l, &m, &t).unwrap();
        let p = extract_e_theta_params(&e).unwrap();
        assert_eq!(p.theta, th);
        assert_eq!((p.lambda, p.t, p.mu), (l, t, m));
        assert!(p.k_consistent);
        assert!(p.exponent_relation);
    }
}
