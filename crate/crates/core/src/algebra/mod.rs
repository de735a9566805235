//! Exact arithmetic: rationals, multivariate polynomials over a fixed variable
//! order, normalized rational functions, and the univariate tools built on
//! them.

pub mod gcd;
pub mod partial;
pub mod poly;
pub mod ratexpr;
pub mod rational;
pub mod roots;
pub mod text;
pub mod upoly;
pub mod var;

use alloc::string::String;

pub use gcd::{gcd, gcd_normalize};
pub use partial::{partial_fractions, residue_at, PartialFractions};
pub use poly::Poly;
pub use ratexpr::{arith, ArithOp, RatExpr};
pub use rational::Rational;
pub use roots::linear_roots;
pub use text::{parse_poly, parse_ratexpr};
pub use upoly::UPoly;
pub use var::Var;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("denominator vanishes after substitution: {0}")]
    VanishingDenominator(String),
    #[error("unbound variables: {0}")]
    UnboundVariables(String),
    #[error("not affine in {var}: degree {degree}")]
    NotAffine { var: Var, degree: usize },
    #[error("pole {pole} has multiplicity {multiplicity}, expected a simple pole")]
    PoleMultiplicity { pole: String, multiplicity: usize },
    #[error("poles do not account for the denominator; remainder {0}")]
    PolesIncomplete(String),
    #[error("factor without roots in the coefficient field: {0}")]
    IrreducibleFactor(String),
    #[error("unsupported coefficient field: {0}")]
    UnsupportedCoefficients(String),
}
