//! Normalized rational functions `num / den` over ℚ.
//!
//! Invariants: `den ≠ 0`, `gcd(num, den) = 1`, and the leading base
//! coefficient of `den` is 1. Zero is `0/1`. Under these rules structural
//! equality is mathematical equality.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::Poly;
use super::rational::Rational;
use super::var::Var;
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatExpr {
    num: Poly,
    den: Poly,
}

/// Arithmetic operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(op: ArithOp, x: &RatExpr, y: &RatExpr) -> Result<RatExpr, AlgebraError> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

impl RatExpr {
    pub fn zero() -> RatExpr {
        RatExpr {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatExpr {
        RatExpr::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatExpr {
        RatExpr {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> RatExpr {
        RatExpr::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> RatExpr {
        RatExpr::from_poly(Poly::int(n))
    }

    pub fn var(v: Var) -> RatExpr {
        RatExpr::from_poly(Poly::var(v))
    }

    /// Builds and normalizes `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatExpr, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero(format!("{num} / 0")));
        }
        Ok(RatExpr::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> RatExpr {
        if num.is_zero() {
            return RatExpr::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        RatExpr::rescale(num, den)
    }

    /// Makes the leading base coefficient of `den` equal to 1.
    fn rescale(num: Poly, den: Poly) -> RatExpr {
        let lc = den.leading_base_coeff().clone();
        if lc.is_one() {
            RatExpr { num, den }
        } else {
            let k = lc.recip();
            RatExpr {
                num: num.scale(&k),
                den: den.scale(&k),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_const(&self) -> Option<Rational> {
        match (self.num.as_const(), self.den.as_const()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn vars(&self) -> alloc::collections::BTreeSet<Var> {
        let mut out = self.num.vars();
        out.extend(self.den.vars());
        out
    }

    pub fn scale(&self, k: &Rational) -> RatExpr {
        if k.is_zero() {
            return RatExpr::zero();
        }
        RatExpr {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatExpr, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero(format!("1 / ({self})")));
        }
        Ok(RatExpr::rescale(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatExpr) -> Result<RatExpr, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero(format!("({self}) / ({rhs})")));
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> RatExpr {
        RatExpr {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn powi(&self, e: i32) -> Result<RatExpr, AlgebraError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.recip()?.pow(e.unsigned_abs()))
        }
    }

    /// Quotient-rule derivative.
    pub fn differentiate(&self, v: Var) -> RatExpr {
        let dn = self.num.derivative(v);
        if self.den.is_const() {
            return RatExpr {
                num: dn,
                den: self.den.clone(),
            };
        }
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return RatExpr::normalize(dn, self.den.clone());
        }
        let top = &(&dn * &self.den) - &(&self.num * &dd);
        RatExpr::normalize(top, &self.den * &self.den)
    }

    /// Simultaneous substitution of every bound variable.
    pub fn substitute(&self, bindings: &BTreeMap<Var, RatExpr>) -> Result<RatExpr, AlgebraError> {
        let n = eval_poly(&self.num, bindings);
        let d = eval_poly(&self.den, bindings);
        if d.is_zero() {
            return Err(AlgebraError::VanishingDenominator(format!("{}", self.den)));
        }
        n.checked_div(&d)
    }

    pub fn substitute_one(&self, v: Var, value: &RatExpr) -> Result<RatExpr, AlgebraError> {
        let mut b = BTreeMap::new();
        b.insert(v, value.clone());
        self.substitute(&b)
    }

    /// Evaluates at rational values for the listed variables.
    pub fn eval_rational(&self, values: &BTreeMap<Var, Rational>) -> Result<RatExpr, AlgebraError> {
        let n = self.num.eval_rational(values);
        let d = self.den.eval_rational(values);
        if d.is_zero() {
            return Err(AlgebraError::VanishingDenominator(format!("{}", self.den)));
        }
        Ok(RatExpr::normalize(n, d))
    }

    /// Value at a point binding every variable.
    pub fn eval_all(&self, values: &BTreeMap<Var, Rational>) -> Result<Rational, AlgebraError> {
        let v = self.eval_rational(values)?;
        v.as_const()
            .ok_or_else(|| AlgebraError::UnboundVariables(format!("{v}")))
    }

    /// Pair `(p0, p1)` with `self = p0 + v·p1`, or an error when `self` is
    /// not affine in `v` with a `v`-free denominator.
    pub fn split_affine(&self, v: Var) -> Result<(RatExpr, RatExpr), AlgebraError> {
        if self.den.contains(v) {
            return Err(AlgebraError::NotAffine { var: v, degree: usize::MAX });
        }
        let deg = self.num.degree_in(v);
        if deg > 1 {
            return Err(AlgebraError::NotAffine { var: v, degree: deg });
        }
        let mut c = self.num.coeffs_in(v);
        c.resize(2, Poly::zero());
        let p1 = c.pop().unwrap();
        let p0 = c.pop().unwrap();
        Ok((
            RatExpr::normalize(p0, self.den.clone()),
            RatExpr::normalize(p1, self.den.clone()),
        ))
    }
}

/// Horner evaluation of a polynomial with some variables replaced by
/// rational functions.
fn eval_poly(p: &Poly, bindings: &BTreeMap<Var, RatExpr>) -> RatExpr {
    if !p.vars().iter().any(|v| bindings.contains_key(v)) {
        return RatExpr::from_poly(p.clone());
    }
    let v = p.main_var().expect("constant polynomials have no bound variables");
    let coeffs: Vec<RatExpr> = p.main_coeffs().iter().map(|c| eval_poly(c, bindings)).collect();
    let x = match bindings.get(&v) {
        Some(value) => value.clone(),
        None => RatExpr::var(v),
    };
    let mut acc = RatExpr::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &x) + c;
    }
    acc
}

impl<'a> Add<&'a RatExpr> for &'a RatExpr {
    type Output = RatExpr;

    fn add(self, rhs: &'a RatExpr) -> RatExpr {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatExpr::normalize(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_const() && rhs.den.is_const() {
            // both denominators are 1 after normalization
            return RatExpr::from_poly(&self.num + &rhs.num);
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatExpr::zero();
            }
            return RatExpr::rescale(num, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        if t.is_zero() {
            return RatExpr::zero();
        }
        let g2 = gcd(&t, &g);
        if g2.is_one() {
            return RatExpr::rescale(t, &b1 * &rhs.den);
        }
        let num = t.div_exact(&g2).unwrap();
        let den = &b1 * &rhs.den.div_exact(&g2).unwrap();
        RatExpr::rescale(num, den)
    }
}

impl<'a> Mul<&'a RatExpr> for &'a RatExpr {
    type Output = RatExpr;

    fn mul(self, rhs: &'a RatExpr) -> RatExpr {
        if self.is_zero() || rhs.is_zero() {
            return RatExpr::zero();
        }
        if self.is_poly() && rhs.is_poly() {
            return RatExpr::from_poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatExpr::rescale(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Neg for &'a RatExpr {
    type Output = RatExpr;

    fn neg(self) -> RatExpr {
        RatExpr {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a RatExpr> for &'a RatExpr {
    type Output = RatExpr;

    fn sub(self, rhs: &'a RatExpr) -> RatExpr {
        self + &(-rhs)
    }
}

impl<'a> Div<&'a RatExpr> for &'a RatExpr {
    type Output = RatExpr;

    /// Panics on division by zero; use [`RatExpr::checked_div`] otherwise.
    fn div(self, rhs: &'a RatExpr) -> RatExpr {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatExpr> for RatExpr {
            type Output = RatExpr;
            fn $m(self, rhs: RatExpr) -> RatExpr {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatExpr {
    type Output = RatExpr;
    fn neg(self) -> RatExpr {
        -&self
    }
}

impl From<Poly> for RatExpr {
    fn from(p: Poly) -> Self {
        RatExpr::from_poly(p)
    }
}

impl From<Rational> for RatExpr {
    fn from(q: Rational) -> Self {
        RatExpr::constant(q)
    }
}

impl From<Var> for RatExpr {
    fn from(v: Var) -> Self {
        RatExpr::var(v)
    }
}

impl From<i64> for RatExpr {
    fn from(n: i64) -> Self {
        RatExpr::int(n)
    }
}

impl Default for RatExpr {
    fn default() -> Self {
        RatExpr::zero()
    }
}

impl core::fmt::Debug for RatExpr {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        core::fmt::Display::fmt(self, f)
    }
}

impl Zero for RatExpr {
    fn zero() -> Self {
        RatExpr::zero()
    }
    fn is_zero(&self) -> bool {
        RatExpr::is_zero(self)
    }
}

impl One for RatExpr {
    fn one() -> Self {
        RatExpr::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn a() -> RatExpr {
        RatExpr::var(Var::A)
    }
    fn s() -> RatExpr {
        RatExpr::var(Var::S)
    }
    fn c(n: i64) -> RatExpr {
        RatExpr::int(n)
    }

    fn t_of_a() -> RatExpr {
        // a^3 (2 - a) / (2a - 1)
        (&a().pow(3) * &(&c(2) - &a())) / (&(&c(2) * &a()) - &c(1))
    }

    fn lambda_of_a() -> RatExpr {
        (&a().pow(2) * &(&c(2) - &a())) / (&(&a().pow(2) - &a()) + &c(1))
    }

    #[test]
    fn add_rationals() {
        let x = RatExpr::constant(rat(1, 2));
        let y = RatExpr::constant(rat(1, 3));
        assert_eq!(arith(ArithOp::Add, &x, &y).unwrap(), RatExpr::constant(rat(5, 6)));
    }

    #[test]
    fn factor_cancellation() {
        let q = arith(ArithOp::Div, &(&s().pow(2) - &c(1)), &(&s() - &c(1))).unwrap();
        assert_eq!(q, &s() + &c(1));
        assert!(q.is_poly());
    }

    #[test]
    fn lambda_denominator_cancels() {
        let den = &(&a().pow(2) - &a()) + &c(1);
        let got = arith(ArithOp::Mul, &lambda_of_a(), &den).unwrap();
        assert_eq!(got, &a().pow(2) * &(&c(2) - &a()));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = arith(ArithOp::Div, &s(), &RatExpr::zero()).unwrap_err();
        assert!(matches!(err, AlgebraError::DivisionByZero(_)));
    }

    #[test]
    fn derivative_of_t() {
        // oracle, by hand: ((6a^2 - 4a^3)(2a - 1) - 2(2a^3 - a^4)) / (2a - 1)^2
        //   = (-6a^4 + 12a^3 - 6a^2) / (2a - 1)^2 = -6a^2 (a - 1)^2 / (2a - 1)^2
        let two_a_minus_1 = &(&c(2) * &a()) - &c(1);
        let expected_num = &(&(&c(-6) * &a().pow(4)) + &(&c(12) * &a().pow(3))) - &(&c(6) * &a().pow(2));
        let expected = &expected_num / &two_a_minus_1.pow(2);
        assert_eq!(t_of_a().differentiate(Var::A), expected);
    }

    #[test]
    fn derivative_basics() {
        assert_eq!(s().pow(3).differentiate(Var::S), &c(3) * &s().pow(2));
        assert!(RatExpr::constant(rat(7, 3)).differentiate(Var::A).is_zero());
    }

    #[test]
    fn substitution_at_three() {
        let t3 = t_of_a().substitute_one(Var::A, &c(3)).unwrap();
        assert_eq!(t3.as_const(), Some(rat(-27, 5)));
        let l3 = lambda_of_a().substitute_one(Var::A, &c(3)).unwrap();
        assert_eq!(l3.as_const(), Some(rat(-9, 7)));
    }

    #[test]
    fn substitution_with_vanishing_denominator() {
        let f = &c(1) / &(&s() - &RatExpr::var(Var::T));
        let err = f.substitute_one(Var::T, &s()).unwrap_err();
        assert!(matches!(err, AlgebraError::VanishingDenominator(_)));
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let f = &c(3) / &(&(&c(2) * &s()) + &c(4));
        assert_eq!(f.den().leading_base_coeff(), &Rational::one());
        assert_eq!(f.num().as_const(), Some(&rat(3, 2)));
    }

    #[test]
    fn affine_split() {
        let sig = RatExpr::var(Var::Sigma);
        let f = &sig * &(&a() + &c(1));
        let (r0, r1) = f.split_affine(Var::Sigma).unwrap();
        assert!(r0.is_zero());
        assert_eq!(r1, &a() + &c(1));
        assert!(sig.pow(2).split_affine(Var::Sigma).is_err());
    }
}
