//! `P_VI` residuals along a parameterized curve.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::params::{PVIParams, PVIVariant, SIGMA};
use super::solution::{AlgebraicSolution, PARAM};
use crate::algebra::gcd::squarefree_part;
use crate::algebra::roots::rational_roots;
use crate::algebra::{Poly, RatExpr, Rational, Var};
use crate::error::Error;

/// Right-hand side of `P_VI` at `(λ, λ', t)` with classical parameters
/// `(α, β, γ, δ)`.
pub fn pvi_rhs(
    lambda: &RatExpr,
    dlambda: &RatExpr,
    t: &RatExpr,
    classical: &[RatExpr; 4],
    variant: PVIVariant,
) -> Result<RatExpr, Error> {
    let one = RatExpr::one();
    let l1 = lambda - &one;
    let lt = lambda - t;
    let t1 = t - &one;
    let inv = |x: &RatExpr| x.recip();
    let half = RatExpr::constant(Rational::new(1.into(), 2.into()));
    let first = &(&half * &(&(&inv(lambda)? + &inv(&l1)?) + &inv(&lt)?)) * &(dlambda * dlambda);
    let second = &(&(&inv(t)? + &inv(&t1)?) + &inv(&lt)?) * dlambda;
    let [al, be, ga, de] = classical;
    let bracket = &(&(al + &(&(be * t) * &inv(&(lambda * lambda))?))
        + &(&(ga * &t1) * &inv(&(&l1 * &l1))?))
        + &(&(&(de * t) * &t1) * &inv(&(&lt * &lt))?);
    let pre = (&(lambda * &l1) * &lt).checked_div(&variant.denominator(t))?;
    Ok(&(&first - &second) + &(&pre * &bracket))
}

/// `λ_tt − RHS` along the curve, with `d/dt = (d/da)/(dt/da)`.
pub fn pvi_residual_on_curve(
    sol: &AlgebraicSolution,
    params: &PVIParams,
    variant: PVIVariant,
) -> Result<RatExpr, Error> {
    let lt = sol.d_dt(&sol.lambda)?;
    let ltt = sol.d_dt(&lt)?;
    let classical = params.classical().map(|x| x.to_ratexpr());
    let rhs = pvi_rhs(&sol.lambda, &lt, &sol.t, &classical, variant)?;
    Ok(&ltt - &rhs)
}

/// `(R0, R1)` with `residual = R0 + σ·R1`.
pub fn pencil_decompose(residual: &RatExpr) -> Result<(RatExpr, RatExpr), Error> {
    Ok(residual.split_affine(SIGMA)?)
}

/// `−t/λ² + (t−1)/(λ−1)² − t(t−1)/(λ−t)²` along the curve.
pub fn bracket_identity_check(sol: &AlgebraicSolution) -> Result<RatExpr, Error> {
    let one = RatExpr::one();
    let (l, t) = (&sol.lambda, &sol.t);
    let sq = |x: &RatExpr| x * x;
    let t1 = t - &one;
    let a = t.checked_div(&sq(l))?;
    let b = t1.checked_div(&sq(&(l - &one)))?;
    let c = (t * &t1).checked_div(&sq(&(l - t)))?;
    Ok(&(&b - &a) - &c)
}

/// The three terms of the bracket at `a = at`, in the order
/// `−t/λ², (t−1)/(λ−1)², −t(t−1)/(λ−t)²`.
pub fn bracket_terms(sol: &AlgebraicSolution, at: &Rational) -> Result<[Rational; 3], Error> {
    let env: BTreeMap<Var, Rational> = [(PARAM, at.clone())].into_iter().collect();
    let l = sol.lambda.eval_all(&env)?;
    let t = sol.t.eval_all(&env)?;
    let one = Rational::from_integer(1.into());
    let sq = |x: &Rational| x * x;
    let div = |n: Rational, d: Rational| {
        if d == Rational::from_integer(0.into()) {
            Err(Error::Structure(format!("the bracket has a pole at a = {at}")))
        } else {
            Ok(n / d)
        }
    };
    Ok([
        div(-t.clone(), sq(&l))?,
        div(&t - &one, sq(&(&l - &one)))?,
        div(-(&t * &(&t - &one)), sq(&(&l - &t)))?,
    ])
}

/// Parameter values where the curve degenerates: a denominator or `dt/da`
/// vanishes, or two of `0, 1, t, λ` collide.
#[derive(Clone, Debug, PartialEq)]
pub struct ExclusionSet {
    /// Squarefree polynomials in `a`; their roots are excluded.
    pub factors: Vec<Poly>,
    /// All rational excluded values, ascending.
    pub rational: Vec<Rational>,
}

impl ExclusionSet {
    pub fn contains(&self, a: &Rational) -> bool {
        let p = Poly::constant(a.clone());
        self.factors
            .iter()
            .any(|f| f.substitute(PARAM, &p).is_zero())
    }
}

pub fn degenerate_parameters(sol: &AlgebraicSolution) -> Result<ExclusionSet, Error> {
    let one = RatExpr::one();
    let (l, t) = (&sol.lambda, &sol.t);
    let mut polys: Vec<Poly> = Vec::new();
    for x in [l, t, &sol.dt_da()] {
        polys.push(x.den().clone());
    }
    polys.push(sol.dt_da().num().clone());
    for x in [l.clone(), t.clone(), l - &one, t - &one, l - t] {
        if x.is_zero() {
            return Err(Error::Structure(format!("curve is degenerate: {}", sol.describe())));
        }
        polys.push(x.num().clone());
    }
    let mut factors: Vec<Poly> = Vec::new();
    let mut rational: Vec<Rational> = Vec::new();
    for p in polys {
        if p.is_const() {
            continue;
        }
        if p.vars().iter().any(|v| *v != PARAM) {
            return Err(Error::Structure(format!("{p} depends on more than a")));
        }
        let sf = squarefree_part(&p, PARAM).monic_base();
        if !factors.contains(&sf) {
            let coeffs = sf.as_univariate(PARAM).expect("univariate");
            rational.extend(rational_roots(&coeffs));
            factors.push(sf);
        }
    }
    rational.sort();
    rational.dedup();
    Ok(ExclusionSet { factors, rational })
}
