use core::fmt;
use core::str::FromStr;

use super::AlgebraError;

/// Indeterminates of the polynomial tower.
///
/// The declaration order is the global variable order: `A` is innermost,
/// `Xi` outermost. A recursive polynomial always has a main variable that is
/// strictly greater than every variable occurring in its coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    Sigma,
    Theta0,
    Theta1,
    ThetaT,
    ThetaInf,
    T,
    Lambda,
    Mu,
    V,
    S,
    Xi,
}

impl Var {
    pub const ALL: [Var; 12] = [
        Var::A,
        Var::Sigma,
        Var::Theta0,
        Var::Theta1,
        Var::ThetaT,
        Var::ThetaInf,
        Var::T,
        Var::Lambda,
        Var::Mu,
        Var::V,
        Var::S,
        Var::Xi,
    ];

    /// ASCII name used by the text syntax.
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::Sigma => "sigma",
            Var::Theta0 => "theta0",
            Var::Theta1 => "theta1",
            Var::ThetaT => "thetat",
            Var::ThetaInf => "thetainf",
            Var::T => "t",
            Var::Lambda => "lambda",
            Var::Mu => "mu",
            Var::V => "v",
            Var::S => "s",
            Var::Xi => "xi",
        }
    }

    fn unicode_alias(self) -> &'static str {
        match self {
            Var::Sigma => "σ",
            Var::Theta0 => "θ0",
            Var::Theta1 => "θ1",
            Var::ThetaT => "θt",
            Var::ThetaInf => "θ∞",
            Var::Lambda => "λ",
            Var::Mu => "μ",
            Var::Xi => "ξ",
            other => other.name(),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s || v.unicode_alias() == s)
            .ok_or_else(|| AlgebraError::UnknownVariable(s.into()))
    }
}
