//! Reference second-order equations for the periods of the first- and
//! second-kind forms of the quartic family.

use crate::algebra::parse_poly;
use crate::fuchs::LinearODE2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `dξ/η`
    First,
    /// `ξ(3ξ − 2(a+1)) dξ/η`
    Second,
}

impl FormKind {
    pub fn name(self) -> &'static str {
        match self {
            FormKind::First => "first",
            FormKind::Second => "second",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "first" => Some(FormKind::First),
            "second" => Some(FormKind::Second),
            _ => None,
        }
    }
}

const A0: &str = "s*(s-1)*((2*a-1)*s+a^3*(a-2))*((a^2-a+1)*s+a^2*(a-2))";
const A1: &str = "2*(2*a-1)*(a^2-a+1)*s^3+(a^6-3*a^5+9*a^4-19*a^3+9*a^2-3*a+1)*s^2\
                  +2*a^2*(a-2)*(a^4-2*a^3-2*a+1)*s-a^5*(a-2)^2";
const A2: &str = "(2*a-1)*(27*(a^2-a+1)*s^2-(a-2)*(2*a^4-a^3-60*a^2-a+2)*s\
                  +a^2*(a-2)^2*(10*a^2+11*a+10))/144";
const B0: &str = "s*(s-1)*((2*a-1)*s+a^3*(a-2))*((a^2-7*a+1)*s-a*(a-2)*(2*a^2+a+2))";
const B1: &str = "(2*a-1)*s*((a^2-7*a+1)*s^2-2*a*(a-2)*(2*a^2+a+2)*s\
                  -a*(a-2)^2*(a^4+a^3+a^2+a+1))";
const B2: &str = "-(2*a-1)*(9*(a^2-7*a+1)*s^2-(a-2)*(10*a^4+31*a^3-12*a^2+31*a+10)*s\
                  -a*(a-2)^2*(2*a^2+a+2)^2)/144";

/// `(a0, a1, a2)` for [`FormKind::First`], `(b0, b1, b2)` for
/// [`FormKind::Second`].
pub fn lemma_coefficients(kind: FormKind) -> LinearODE2 {
    let [c0, c1, c2] = match kind {
        FormKind::First => [A0, A1, A2],
        FormKind::Second => [B0, B1, B2],
    };
    let p = |s: &str| parse_poly(s).expect("well-formed coefficient");
    LinearODE2::new(p(c0), p(c1), p(c2)).expect("a0 nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gcd::gcd;
    use crate::algebra::{Poly, Var};

    #[test]
    fn a0_at_three() {
        let e = lemma_coefficients(FormKind::First);
        let a0 = e.a0().substitute(Var::A, &Poly::int(3));
        assert_eq!(a0, parse_poly("s*(s-1)*(5*s+27)*(7*s+9)").unwrap());
    }

    #[test]
    fn a0_has_factor_s() {
        let e = lemma_coefficients(FormKind::First);
        assert_eq!(gcd(e.a0(), &Poly::var(Var::S)), Poly::var(Var::S));
    }

    #[test]
    fn b0_contains_apparent_factor() {
        let e = lemma_coefficients(FormKind::Second);
        let f = parse_poly("(a^2-7*a+1)*s - a*(a-2)*(2*a^2+a+2)").unwrap();
        assert!(e.a0().div_exact(&f).is_some());
    }

    #[test]
    fn b1_vanishes_at_zero() {
        let e = lemma_coefficients(FormKind::Second);
        assert!(e.a1().substitute(Var::S, &Poly::zero()).is_zero());
    }
}
