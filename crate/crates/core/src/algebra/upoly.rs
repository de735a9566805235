//! Dense univariate polynomials over a field: ℚ, or a rational function
//! field such as ℚ(a) or ℚ(a, s).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::ratexpr::RatExpr;
use super::rational::Rational;
use super::var::Var;

pub trait Field: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_int(n: i64) -> Self {
        super::rational::int(n)
    }
}

impl Field for RatExpr {
    fn zero() -> Self {
        RatExpr::zero()
    }
    fn one() -> Self {
        RatExpr::one()
    }
    fn is_zero(&self) -> bool {
        RatExpr::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip().expect("inverse of a nonzero rational function")
    }
    fn from_int(n: i64) -> Self {
        RatExpr::int(n)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        UPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UPoly::new(vec![F::zero(), F::one()])
    }

    /// `x - r`
    pub fn linear_root(r: &F) -> Self {
        UPoly::new(vec![r.neg(), F::one()])
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(F::neg).collect())
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add(&x.mul(y));
                }
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::constant(F::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn shift_degree(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let lead = r.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let f = lead.mul(&inv);
            for (j, dj) in d.coeffs.iter().enumerate().take(dd) {
                r[k + j] = r[k + j].sub(&f.mul(dj));
            }
            q[k] = f;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient, `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lc().inv())
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `(g, u, v)` with `u·self + v·rhs = g`, `g` monic.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (UPoly::constant(F::one()), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(F::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = r0.lc().inv();
        (r0.scale(&k), s0.scale(&k), t0.scale(&k))
    }

    /// `p(x + c)`
    pub fn taylor_shift(&self, c: &F) -> Self {
        let lin = UPoly::new(vec![c.clone(), F::one()]);
        let mut acc = UPoly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UPoly::constant(coeff.clone()));
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &F) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = UPoly::linear_root(r);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            m += 1;
        }
        m
    }
}

impl UPoly<RatExpr> {
    /// View of `p` as a polynomial in `v` over the field of the other
    /// variables.
    pub fn from_poly(p: &Poly, v: Var) -> Self {
        UPoly::new(
            p.coeffs_in(v)
                .into_iter()
                .map(RatExpr::from_poly)
                .collect(),
        )
    }

    pub fn to_ratexpr(&self, v: Var) -> RatExpr {
        let x = RatExpr::var(v);
        let mut acc = RatExpr::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }

    /// Clears coefficient denominators: returns `(p, m)` with
    /// `p = m · self` a polynomial in `v` over the polynomial ring.
    pub fn clear_denominators(&self, v: Var) -> (Poly, Poly) {
        let mut m = Poly::one();
        for c in &self.coeffs {
            if !c.den().is_one() {
                let g = super::gcd::gcd(&m, c.den());
                m = &m * &c.den().div_exact(&g).unwrap();
            }
        }
        let mr = RatExpr::from_poly(m.clone());
        let coeffs: Vec<Poly> = self
            .coeffs
            .iter()
            .map(|c| {
                let x = c * &mr;
                debug_assert!(x.is_poly());
                x.num().clone()
            })
            .collect();
        (Poly::from_coeffs_in(v, coeffs), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn q(coeffs: &[i64]) -> UPoly<Rational> {
        UPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn div_rem_and_gcd() {
        let p = q(&[-1, 0, 1]);
        let d = q(&[-1, 1]);
        let (quo, r) = p.div_rem(&d);
        assert_eq!(quo, q(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&q(&[1, 1])), q(&[1, 1]));
    }

    #[test]
    fn bezout_identity() {
        let f = q(&[1, 0, 0, 2]);
        let g = q(&[0, 3, 1]);
        let (h, u, v) = f.ext_gcd(&g);
        assert_eq!(h, q(&[1]));
        assert_eq!(u.mul(&f).add(&v.mul(&g)), h);
    }

    #[test]
    fn shift_and_multiplicity() {
        // (x-2)^2 (x+1)
        let p = q(&[-2, 1]).pow(2).mul(&q(&[1, 1]));
        assert_eq!(p.root_multiplicity(&int(2)), 2);
        assert_eq!(p.root_multiplicity(&int(-1)), 1);
        assert_eq!(p.root_multiplicity(&int(0)), 0);
        let shifted = p.taylor_shift(&int(2));
        assert_eq!(shifted.coeff(0), int(0));
        assert_eq!(shifted.coeff(1), int(0));
        assert_eq!(shifted.eval(&rat(1, 2)), p.eval(&rat(5, 2)));
    }
}
