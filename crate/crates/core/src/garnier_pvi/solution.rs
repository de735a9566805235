//! Curves `a ↦ (λ(a), t(a))`, optionally with `μ(a)`.

use alloc::format;
use alloc::string::String;

use crate::algebra::{parse_ratexpr, RatExpr, Var};
use crate::error::Error;

/// Parameter of every curve.
pub const PARAM: Var = Var::A;

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicSolution {
    pub lambda: RatExpr,
    pub t: RatExpr,
    pub mu: Option<RatExpr>,
}

fn parsed(s: &str) -> RatExpr {
    parse_ratexpr(s).expect("well-formed constant expression")
}

impl AlgebraicSolution {
    pub fn new(lambda: RatExpr, t: RatExpr) -> Self {
        AlgebraicSolution { lambda, t, mu: None }
    }

    pub fn with_mu(mut self, mu: RatExpr) -> Self {
        self.mu = Some(mu);
        self
    }

    /// `λ = a²(2−a)/(a²−a+1)`, `t = a³(2−a)/(2a−1)`.
    pub fn eq1() -> Self {
        AlgebraicSolution::new(parsed("a^2*(2-a)/(a^2-a+1)"), Self::t_of_a())
    }

    /// `λ = a(a−2)(2a²+a+2)/(a²−7a+1)`, same `t`.
    pub fn eq2() -> Self {
        AlgebraicSolution::new(parsed("a*(a-2)*(2*a^2+a+2)/(a^2-7*a+1)"), Self::t_of_a())
    }

    pub fn t_of_a() -> RatExpr {
        parsed("a^3*(2-a)/(2*a-1)")
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "eq1" => Some(Self::eq1()),
            "eq2" => Some(Self::eq2()),
            _ => None,
        }
    }

    pub fn dt_da(&self) -> RatExpr {
        self.t.differentiate(PARAM)
    }

    /// `d/dt` of a function of `a` along the curve.
    pub fn d_dt(&self, f: &RatExpr) -> Result<RatExpr, Error> {
        let dt = self.dt_da();
        if dt.is_zero() {
            return Err(Error::Structure("dt/da vanishes identically".into()));
        }
        Ok(f.differentiate(PARAM).checked_div(&dt)?)
    }

    /// Checks `dt/da ≢ 0` and that `λ, t, 0, 1` are pairwise distinct.
    pub fn validate(&self) -> Result<(), Error> {
        if self.dt_da().is_zero() {
            return Err(Error::Structure("dt/da vanishes identically".into()));
        }
        let zero = RatExpr::zero();
        let one = RatExpr::one();
        let named: [(&str, &RatExpr); 4] =
            [("λ", &self.lambda), ("t", &self.t), ("0", &zero), ("1", &one)];
        for i in 0..4 {
            for j in i + 1..4 {
                if named[i].1 == named[j].1 {
                    return Err(Error::Structure(format!(
                        "{} and {} coincide",
                        named[i].0, named[j].0
                    )));
                }
            }
        }
        Ok(())
    }

    /// Composes with `a ↦ m(a)`.
    pub fn reparameterize(&self, m: &RatExpr) -> Result<Self, Error> {
        let sub = |x: &RatExpr| x.substitute_one(PARAM, m);
        Ok(AlgebraicSolution {
            lambda: sub(&self.lambda)?,
            t: sub(&self.t)?,
            mu: self.mu.as_ref().map(sub).transpose()?,
        })
    }

    pub fn describe(&self) -> String {
        format!("λ = {}, t = {}", self.lambda, self.t)
    }
}
