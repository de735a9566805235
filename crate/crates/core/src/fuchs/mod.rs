//! Second-order Fuchsian equations `a0 x'' + a1 x' + a2 x = 0` in the
//! variable `s`: singular points, local exponents, Riemann schemes,
//! apparent singularities, and the five-point normal form `E_θ(λ, μ, t)`.

mod etheta;
mod local;
mod scheme;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::gcd::gcd;
use crate::algebra::{linear_roots, Poly, RatExpr, Var};
use crate::error::Error;

pub use etheta::{build_e_theta, extract_e_theta_params, okamoto_hamiltonian, EThetaParams, Theta};
pub use local::{apparent_test, indicial_exponents, ApparentCertificate, Verdict};
pub use scheme::{riemann_scheme, RiemannScheme, SchemeEntry};

/// Independent variable of every equation in this module.
pub const S: Var = Var::S;

/// A point of the projective `s`-line.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Finite(RatExpr),
    Infinity,
}

impl Point {
    pub fn finite(&self) -> Option<&RatExpr> {
        match self {
            Point::Finite(p) => Some(p),
            Point::Infinity => None,
        }
    }
}

impl From<RatExpr> for Point {
    fn from(p: RatExpr) -> Self {
        Point::Finite(p)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(p) => write!(f, "{p}"),
            Point::Infinity => f.write_str("∞"),
        }
    }
}

/// `a0 x'' + a1 x' + a2 x = 0` with polynomial coefficients in `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearODE2 {
    a0: Poly,
    a1: Poly,
    a2: Poly,
}

impl LinearODE2 {
    pub fn new(a0: Poly, a1: Poly, a2: Poly) -> Result<Self, Error> {
        if a0.is_zero() {
            return Err(Error::Structure("leading coefficient a0 is zero".into()));
        }
        Ok(LinearODE2 { a0, a1, a2 })
    }

    /// Clears the denominators of `c0 x'' + c1 x' + c2 x = 0`.
    pub fn from_ratexprs(c0: &RatExpr, c1: &RatExpr, c2: &RatExpr) -> Result<Self, Error> {
        let mut l = Poly::one();
        for c in [c0, c1, c2] {
            let g = gcd(&l, c.den());
            l = &l * &c.den().div_exact(&g).expect("gcd divides");
        }
        let lr = RatExpr::from_poly(l);
        let clear = |c: &RatExpr| (c * &lr).num().clone();
        LinearODE2::new(clear(c0), clear(c1), clear(c2))
    }

    pub fn a0(&self) -> &Poly {
        &self.a0
    }

    pub fn a1(&self) -> &Poly {
        &self.a1
    }

    pub fn a2(&self) -> &Poly {
        &self.a2
    }

    pub fn coeffs(&self) -> [&Poly; 3] {
        [&self.a0, &self.a1, &self.a2]
    }

    /// `p1 = a1/a0`.
    pub fn p1(&self) -> RatExpr {
        RatExpr::new(self.a1.clone(), self.a0.clone()).expect("a0 nonzero")
    }

    /// `p2 = a2/a0`.
    pub fn p2(&self) -> RatExpr {
        RatExpr::new(self.a2.clone(), self.a0.clone()).expect("a0 nonzero")
    }

    /// Common factor removed and `a0` scaled to leading base coefficient 1.
    /// Two equations are proportional over the coefficient field exactly when
    /// their normalized forms coincide.
    pub fn normalized(&self) -> LinearODE2 {
        let g = gcd(&gcd(&self.a0, &self.a1), &self.a2);
        let div = |p: &Poly| p.div_exact(&g).expect("gcd divides");
        let (a0, a1, a2) = (div(&self.a0), div(&self.a1), div(&self.a2));
        let k = a0.leading_base_coeff().recip();
        LinearODE2 {
            a0: a0.scale(&k),
            a1: a1.scale(&k),
            a2: a2.scale(&k),
        }
    }

    /// `c` with `self = c · other` coefficientwise, if it exists and does not
    /// involve `s`.
    pub fn proportionality(&self, other: &LinearODE2) -> Option<RatExpr> {
        let c = RatExpr::new(self.a0.clone(), other.a0.clone()).ok()?;
        if c.contains(S) {
            return None;
        }
        let pairs = [(&self.a1, &other.a1), (&self.a2, &other.a2)];
        pairs
            .iter()
            .all(|(x, y)| RatExpr::from_poly((*x).clone()) == &c * &RatExpr::from_poly((*y).clone()))
            .then_some(c)
    }

    /// Substitutes `v = value` in all coefficients.
    pub fn specialize(&self, v: Var, value: &Poly) -> Result<LinearODE2, Error> {
        LinearODE2::new(
            self.a0.substitute(v, value),
            self.a1.substitute(v, value),
            self.a2.substitute(v, value),
        )
    }

    /// Applies the operator to `x`, a rational function of `s`.
    pub fn apply(&self, x: &RatExpr) -> RatExpr {
        let d1 = x.differentiate(S);
        let d2 = d1.differentiate(S);
        let r = |p: &Poly| RatExpr::from_poly(p.clone());
        &(&(&r(&self.a0) * &d2) + &(&r(&self.a1) * &d1)) + &(&r(&self.a2) * x)
    }
}

impl fmt::Display for LinearODE2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x'' + ({})x' + ({})x = 0", self.a0, self.a1, self.a2)
    }
}

/// Distinct roots of `a0` followed by `∞`.
pub fn singular_points(ode: &LinearODE2) -> Result<Vec<Point>, Error> {
    let roots = linear_roots(ode.a0(), S)?;
    let mut pts: Vec<RatExpr> = roots.into_iter().map(|(r, _)| r).collect();
    sort_points(&mut pts);
    let mut out: Vec<Point> = pts.into_iter().map(Point::Finite).collect();
    out.push(Point::Infinity);
    Ok(out)
}

/// Constants first in ascending order, then the rest by printed form.
pub(crate) fn sort_points(pts: &mut [RatExpr]) {
    pts.sort_by(|x, y| match (x.as_const(), y.as_const()) {
        (Some(a), Some(b)) => a.cmp(&b),
        (Some(_), None) => core::cmp::Ordering::Less,
        (None, Some(_)) => core::cmp::Ordering::Greater,
        (None, None) => format!("{x}").cmp(&format!("{y}")),
    });
}

pub(crate) fn describe(p: &Point) -> String {
    format!("{p}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn ode(a0: &str, a1: &str, a2: &str) -> LinearODE2 {
        LinearODE2::new(parse_poly(a0).unwrap(), parse_poly(a1).unwrap(), parse_poly(a2).unwrap())
            .unwrap()
    }

    #[test]
    fn single_finite_singularity() {
        let e = ode("s", "1", "1");
        assert_eq!(
            singular_points(&e).unwrap(),
            alloc::vec![Point::Finite(RatExpr::zero()), Point::Infinity]
        );
    }

    #[test]
    fn normalization_removes_common_factor() {
        let e = ode("2*a*s^2", "4*a*s", "6*a");
        let n = e.normalized();
        assert_eq!(n.a0(), &parse_poly("s^2").unwrap());
        assert_eq!(n.a2(), &parse_poly("3").unwrap());
        assert_eq!(e.proportionality(&n).unwrap(), RatExpr::constant(crate::algebra::rational::int(2)) * RatExpr::var(Var::A));
    }

    #[test]
    fn zero_leading_coefficient_rejected() {
        assert!(LinearODE2::new(Poly::zero(), Poly::one(), Poly::one()).is_err());
    }

    #[test]
    fn apply_annihilates_solution() {
        // s^2 x'' - 2x = 0 has x = s^2
        let e = ode("s^2", "0", "-2");
        assert!(e.apply(&RatExpr::var(S).pow(2)).is_zero());
    }
}
