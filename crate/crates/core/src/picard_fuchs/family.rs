//! The quartic family `η² = s − Q(ξ; a)`,
//! `Q = (3ξ⁴ − 4(a+1)ξ³ + 6aξ²)/(2a−1)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::rational::int;
use crate::algebra::{linear_roots, RatExpr, Rational, UPoly, Var};
use crate::error::Error;

pub const XI: Var = Var::Xi;

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticFamily {
    a: RatExpr,
}

impl QuarticFamily {
    /// The family over ℚ(a).
    pub fn symbolic() -> Self {
        QuarticFamily { a: RatExpr::var(Var::A) }
    }

    pub fn at(a: Rational) -> Result<Self, Error> {
        if a == Rational::new(1.into(), 2.into()) {
            return Err(Error::Structure("a = 1/2 makes Q undefined".into()));
        }
        Ok(QuarticFamily { a: RatExpr::constant(a) })
    }

    pub fn a(&self) -> &RatExpr {
        &self.a
    }

    fn inv_2a1(&self) -> RatExpr {
        (&self.a.scale(&int(2)) - &RatExpr::one())
            .recip()
            .expect("2a - 1 nonzero")
    }

    /// `Q` as a polynomial in `ξ`.
    pub fn q(&self) -> UPoly<RatExpr> {
        let d = self.inv_2a1();
        let a1 = &self.a + &RatExpr::one();
        UPoly::new(vec![
            RatExpr::zero(),
            RatExpr::zero(),
            &self.a.scale(&int(6)) * &d,
            &a1.scale(&int(-4)) * &d,
            d.scale(&int(3)),
        ])
    }

    /// `F = s − Q`, so that `η² = F`.
    pub fn fiber(&self) -> UPoly<RatExpr> {
        UPoly::constant(RatExpr::var(Var::S)).sub(&self.q())
    }

    /// `t(a) = a³(2−a)/(2a−1)`.
    pub fn t(&self) -> RatExpr {
        let a = &self.a;
        &(&a.pow(3) * &(&RatExpr::int(2) - a)) * &self.inv_2a1()
    }
}

/// Values of `Q` at the roots of `∂Q/∂ξ`, in the order of the critical
/// points `0, 1, a`.
pub fn critical_values(fam: &QuarticFamily) -> Result<Vec<RatExpr>, Error> {
    let q = fam.q();
    let (dq, _) = q.derivative().clear_denominators(XI);
    let points = linear_roots(&dq, XI)?;
    if points.len() != 3 || points.iter().any(|(_, m)| *m != 1) {
        return Err(Error::Structure(format!(
            "degenerate a = {}: critical points collide",
            fam.a()
        )));
    }
    let mut pts: Vec<RatExpr> = points.into_iter().map(|(p, _)| p).collect();
    crate::fuchs::sort_points(&mut pts);
    let values: Vec<RatExpr> = pts.iter().map(|p| q.eval(p)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if values[i] == values[j] {
                return Err(Error::Structure(format!(
                    "degenerate a = {}: critical values collide",
                    fam.a()
                )));
            }
        }
    }
    Ok(values)
}
