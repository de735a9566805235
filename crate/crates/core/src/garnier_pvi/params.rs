//! `P_VI` parameters, affine in the pencil variable `σ`.

use core::fmt;

use crate::algebra::rational::{int, rat};
use crate::algebra::{RatExpr, Rational, Var};
use crate::fuchs::Theta;

/// Pencil variable.
pub const SIGMA: Var = Var::Sigma;

/// `constant + sigma · σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub constant: Rational,
    pub sigma: Rational,
}

impl Affine {
    pub fn new(constant: Rational, sigma: Rational) -> Self {
        Affine { constant, sigma }
    }

    pub fn constant(c: Rational) -> Self {
        Affine::new(c, int(0))
    }

    pub fn to_ratexpr(&self) -> RatExpr {
        &RatExpr::constant(self.constant.clone())
            + &RatExpr::var(SIGMA).scale(&self.sigma)
    }

    fn neg(&self) -> Affine {
        Affine::new(-&self.constant, -&self.sigma)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratexpr())
    }
}

/// `(α0, α1, α2, α3) = (α, −β, γ, ½ − δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PVIParams {
    pub alpha: [Affine; 4],
}

impl PVIParams {
    pub fn new(alpha: [Affine; 4]) -> Self {
        PVIParams { alpha }
    }

    pub fn constant(alpha: [Rational; 4]) -> Self {
        PVIParams::new(alpha.map(Affine::constant))
    }

    /// `(1/8, σ/8, σ/8, σ/8)`.
    pub fn pencil() -> Self {
        let s = Affine::new(int(0), rat(1, 8));
        PVIParams::new([Affine::constant(rat(1, 8)), s.clone(), s.clone(), s])
    }

    /// Classical `(α, β, γ, δ) = (α0, −α1, α2, ½ − α3)`.
    pub fn classical(&self) -> [Affine; 4] {
        let [a0, a1, a2, a3] = &self.alpha;
        let d = a3.neg();
        [
            a0.clone(),
            a1.neg(),
            a2.clone(),
            Affine::new(&d.constant + &rat(1, 2), d.sigma),
        ]
    }

    /// Inverse of [`PVIParams::classical`].
    pub fn from_classical(c: [Affine; 4]) -> Self {
        let [a, b, g, d] = c;
        let a3 = Affine::new(rat(1, 2) - &d.constant, -&d.sigma);
        PVIParams::new([a, b.neg(), g, a3])
    }

    pub fn is_constant(&self) -> bool {
        self.alpha.iter().all(|x| x.sigma == int(0))
    }
}

impl fmt::Display for PVIParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.alpha;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Denominator of the `λ(λ−1)(λ−t)` prefactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PVIVariant {
    /// `t²(t−1)²`
    Standard,
    /// `t²(t²−1)`
    Printed,
}

impl PVIVariant {
    pub const ALL: [PVIVariant; 2] = [PVIVariant::Standard, PVIVariant::Printed];

    pub fn name(self) -> &'static str {
        match self {
            PVIVariant::Standard => "standard",
            PVIVariant::Printed => "printed",
        }
    }

    pub fn denominator(self, t: &RatExpr) -> RatExpr {
        let one = RatExpr::one();
        let t2 = t * t;
        match self {
            PVIVariant::Standard => {
                let u = t - &one;
                &t2 * &(&u * &u)
            }
            PVIVariant::Printed => &t2 * &(&t2 - &one),
        }
    }
}

/// `α = (½θ∞², ½θ0², ½θ1², ½θt²)`.
pub fn alpha_from_theta(theta: &Theta) -> PVIParams {
    let h = |x: &Rational| x * x / int(2);
    PVIParams::constant([
        h(&theta.thetainf),
        h(&theta.theta0),
        h(&theta.theta1),
        h(&theta.thetat),
    ])
}
