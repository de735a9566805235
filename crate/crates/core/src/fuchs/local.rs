//! Local analysis at a point: the equation rewritten as
//! `u² x'' + u P(u) x' + Q(u) x = 0` in a local coordinate `u`, its indicial
//! equation, and the Frobenius recursion.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use super::{describe, LinearODE2, Point, S};
use crate::algebra::rational::{int, sqrt_exact};
use crate::algebra::{RatExpr, Rational, UPoly};
use crate::error::Error;

/// Series data `P_k`, `Q_k` around a regular singular point.
pub(crate) struct LocalSeries {
    p: Vec<RatExpr>,
    q: Vec<RatExpr>,
}

fn low_order(c: &[RatExpr]) -> Option<usize> {
    c.iter().position(|x| !x.is_zero())
}

fn shifted(c: &[RatExpr], offset: isize, n: usize) -> Vec<RatExpr> {
    (0..n as isize)
        .map(|k| {
            let i = k + offset;
            if i < 0 {
                RatExpr::zero()
            } else {
                c.get(i as usize).cloned().unwrap_or_else(RatExpr::zero)
            }
        })
        .collect()
}

fn series_div(num: &[RatExpr], den: &[RatExpr], n: usize) -> Vec<RatExpr> {
    let inv0 = den[0].recip().expect("nonzero constant term");
    let mut out: Vec<RatExpr> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num[k].clone();
        for j in 1..=k.min(den.len() - 1) {
            acc = &acc - &(&den[j] * &out[k - j]);
        }
        out.push(&acc * &inv0);
    }
    out
}

/// Coefficients of the equation in the local coordinate (`u = s - p`, or
/// `u = 1/s` at infinity), as polynomials in `u`.
fn local_coeffs(ode: &LinearODE2, point: &Point) -> [Vec<RatExpr>; 3] {
    let up = |p| UPoly::<RatExpr>::from_poly(p, S);
    let (b0, b1, b2) = (up(ode.a0()), up(ode.a1()), up(ode.a2()));
    match point {
        Point::Finite(p) => [
            b0.taylor_shift(p).coeffs().to_vec(),
            b1.taylor_shift(p).coeffs().to_vec(),
            b2.taylor_shift(p).coeffs().to_vec(),
        ],
        Point::Infinity => {
            // x'(s) = -u² X', x''(s) = u⁴ X'' + 2u³ X'
            let d = [&b0, &b1, &b2]
                .iter()
                .filter_map(|b| b.degree())
                .max()
                .unwrap_or(0);
            let rev = |b: &UPoly<RatExpr>| {
                UPoly::new((0..=d).map(|k| b.coeff(d - k)).collect::<Vec<_>>())
            };
            let (h0, h1, h2) = (rev(&b0), rev(&b1), rev(&b2));
            let c0 = h0.shift_degree(4);
            let c1 = h0
                .shift_degree(3)
                .scale(&RatExpr::int(2))
                .sub(&h1.shift_degree(2));
            [c0.coeffs().to_vec(), c1.coeffs().to_vec(), h2.coeffs().to_vec()]
        }
    }
}

pub(crate) fn local_series(ode: &LinearODE2, point: &Point, n: usize) -> Result<LocalSeries, Error> {
    let [c0, c1, c2] = local_coeffs(ode, point);
    let m0 = low_order(&c0).expect("a0 nonzero");
    let irregular = |c: &[RatExpr], drop: usize| low_order(c).is_some_and(|m| m + drop < m0);
    if irregular(&c1, 1) || irregular(&c2, 2) {
        return Err(Error::Structure(format!(
            "irregular singular point at {}",
            describe(point)
        )));
    }
    let b0 = shifted(&c0, m0 as isize, n);
    let p = series_div(&shifted(&c1, m0 as isize - 1, n), &b0, n);
    let q = series_div(&shifted(&c2, m0 as isize - 2, n), &b0, n);
    Ok(LocalSeries { p, q })
}

fn constant(x: &RatExpr, what: &str) -> Result<Rational, Error> {
    x.as_const().ok_or_else(|| {
        Error::Structure(format!("{what} depends on the parameters: {x}"))
    })
}

/// Exponents at `point`, ascending.
pub fn indicial_exponents(ode: &LinearODE2, point: &Point) -> Result<(Rational, Rational), Error> {
    let ls = local_series(ode, point, 1)?;
    let r0 = constant(&ls.p[0], "indicial coefficient")?;
    let q0 = constant(&ls.q[0], "indicial coefficient")?;
    // ρ² + (r0 - 1)ρ + q0 = 0
    let b = &r0 - int(1);
    let disc = &b * &b - &q0 * int(4);
    let root = sqrt_exact(&disc).ok_or_else(|| {
        Error::Structure(format!(
            "exponents at {} are not rational (discriminant {disc})",
            describe(point)
        ))
    })?;
    let two = int(2);
    let lo = (-&b - &root) / &two;
    let hi = (-&b + &root) / &two;
    Ok((lo, hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Apparent,
    Logarithmic,
}

/// Outcome of the Frobenius recursion from the smaller exponent.
#[derive(Clone, Debug, PartialEq)]
pub struct ApparentCertificate {
    pub exponents: (Rational, Rational),
    /// Exponent difference.
    pub n: u32,
    /// Frobenius coefficients `c_0 = 1, …, c_{n-1}`.
    pub coefficients: Vec<RatExpr>,
    /// Right-hand side of the recursion at level `n`; zero exactly when the
    /// local solutions are free of logarithms.
    pub obstruction: RatExpr,
    pub verdict: Verdict,
}

/// Decides whether the singular point is apparent: integer exponents
/// `ρ, ρ + n` with `n ≥ 1` and no logarithmic solution.
pub fn apparent_test(ode: &LinearODE2, point: &Point) -> Result<ApparentCertificate, Error> {
    let (lo, hi) = indicial_exponents(ode, point)?;
    let diff = &hi - &lo;
    if !diff.is_integer() || !diff.is_positive() || !lo.is_integer() {
        return Err(Error::NotApplicable(format!(
            "exponents {lo}, {hi} at {} are not integers with positive difference",
            describe(point)
        )));
    }
    let n: u32 = diff
        .to_integer()
        .try_into()
        .map_err(|_| Error::NotApplicable(format!("exponent difference {diff} too large")))?;
    let ls = local_series(ode, point, n as usize + 1)?;
    let rho = RatExpr::constant(lo.clone());
    let indicial = |r: &RatExpr| -> RatExpr {
        &(&(r * &(r - &RatExpr::one())) + &(&ls.p[0] * r)) + &ls.q[0]
    };
    let rhs = |c: &[RatExpr], k: usize| -> RatExpr {
        let mut acc = RatExpr::zero();
        for (j, cj) in c.iter().enumerate().take(k) {
            let jr = &RatExpr::int(j as i64) + &rho;
            let term = &(&(&jr * &ls.p[k - j]) + &ls.q[k - j]) * cj;
            acc = &acc - &term;
        }
        acc
    };
    let mut c = vec![RatExpr::one()];
    for k in 1..n as usize {
        let f = indicial(&(&RatExpr::int(k as i64) + &rho));
        let next = rhs(&c, k).checked_div(&f)?;
        c.push(next);
    }
    let obstruction = rhs(&c, n as usize);
    let verdict = if obstruction.is_zero() {
        Verdict::Apparent
    } else {
        Verdict::Logarithmic
    };
    Ok(ApparentCertificate {
        exponents: (lo, hi),
        n,
        coefficients: c,
        obstruction,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::algebra::rational::rat;

    fn ode(a0: &str, a1: &str, a2: &str) -> LinearODE2 {
        LinearODE2::new(parse_poly(a0).unwrap(), parse_poly(a1).unwrap(), parse_poly(a2).unwrap())
            .unwrap()
    }

    #[test]
    fn euler_equation_exponents() {
        // s² x'' + s x' - x/4 = 0: x = s^(±1/2); at ∞ the same pair
        let e = ode("4*s^2", "4*s", "-1");
        let zero = Point::Finite(RatExpr::zero());
        assert_eq!(indicial_exponents(&e, &zero).unwrap(), (rat(-1, 2), rat(1, 2)));
        assert_eq!(indicial_exponents(&e, &Point::Infinity).unwrap(), (rat(-1, 2), rat(1, 2)));
    }

    #[test]
    fn irregular_point_rejected() {
        let e = ode("s^3", "1", "1");
        assert!(indicial_exponents(&e, &Point::Finite(RatExpr::zero())).is_err());
    }

    #[test]
    fn half_integer_exponents_not_applicable() {
        // s² x'' + s x' + (s² - 1/4) x: exponents ±1/2
        let e = ode("s^2", "s", "s^2 - 1/4");
        let zero = Point::Finite(RatExpr::zero());
        assert!(matches!(apparent_test(&e, &zero), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn logarithmic_and_apparent_cases() {
        // s x'' + x = 0 at 0: exponents 0, 1, logarithmic
        let e = ode("s", "0", "1");
        let cert = apparent_test(&e, &Point::Finite(RatExpr::zero())).unwrap();
        assert_eq!(cert.verdict, Verdict::Logarithmic);
        // s x'' - x' = 0 has solutions 1, s²: exponents 0, 2, apparent
        let e = ode("s", "-1", "0");
        let cert = apparent_test(&e, &Point::Finite(RatExpr::zero())).unwrap();
        assert_eq!(cert.n, 2);
        assert_eq!(cert.verdict, Verdict::Apparent);
        assert!(cert.obstruction.is_zero());
    }

    #[test]
    fn equal_exponents_not_applicable() {
        let e = ode("s^2", "s", "0");
        assert!(matches!(
            apparent_test(&e, &Point::Finite(RatExpr::zero())),
            Err(Error::NotApplicable(_))
        ));
    }
}
