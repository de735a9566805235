//! Partial fractions and residues at simple poles.

use alloc::format;
use alloc::vec::Vec;

use super::ratexpr::RatExpr;
use super::upoly::UPoly;
use super::var::Var;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractions {
    /// Polynomial part, in the main variable.
    pub polynomial_part: UPoly<RatExpr>,
    /// `(pole, residue)` in the order the poles were supplied.
    pub terms: Vec<(RatExpr, RatExpr)>,
}

impl PartialFractions {
    pub fn residue_at(&self, pole: &RatExpr) -> Option<&RatExpr> {
        self.terms.iter().find(|(p, _)| p == pole).map(|(_, r)| r)
    }

    /// Reassembles `Σ r/(v - p) + polynomial part`.
    pub fn recombine(&self, v: Var) -> RatExpr {
        let x = RatExpr::var(v);
        self.terms
            .iter()
            .filter(|(_, r)| !r.is_zero())
            .fold(self.polynomial_part.to_ratexpr(v), |acc, (p, r)| {
                &acc + &(r / &(&x - p))
            })
    }
}

fn split(f: &RatExpr, v: Var) -> (UPoly<RatExpr>, UPoly<RatExpr>) {
    (UPoly::from_poly(f.num(), v), UPoly::from_poly(f.den(), v))
}

/// Decomposes `f` (a rational function of `v`) over the given simple poles.
pub fn partial_fractions(
    f: &RatExpr,
    v: Var,
    poles: &[RatExpr],
) -> Result<PartialFractions, AlgebraError> {
    let (num, den) = split(f, v);
    let (quotient, rem) = num.div_rem(&den);
    let dden = den.derivative();
    let mut terms = Vec::with_capacity(poles.len());
    for p in poles {
        let m = den.root_multiplicity(p);
        if m >= 2 {
            return Err(AlgebraError::PoleMultiplicity {
                pole: format!("{p}"),
                multiplicity: m,
            });
        }
        let r = if m == 0 {
            RatExpr::zero()
        } else {
            rem.eval(p).checked_div(&dden.eval(p))?
        };
        terms.push((p.clone(), r));
    }
    let out = PartialFractions {
        polynomial_part: quotient,
        terms,
    };
    let leftover = f - &out.recombine(v);
    if !leftover.is_zero() {
        return Err(AlgebraError::PolesIncomplete(format!("{leftover}")));
    }
    Ok(out)
}

/// Residue of `f` at `v = pole`; zero when `f` is regular there.
pub fn residue_at(f: &RatExpr, v: Var, pole: &RatExpr) -> Result<RatExpr, AlgebraError> {
    let (num, den) = split(f, v);
    match den.root_multiplicity(pole) {
        0 => Ok(RatExpr::zero()),
        1 => num.eval(pole).checked_div(&den.derivative().eval(pole)),
        m => Err(AlgebraError::PoleMultiplicity {
            pole: format!("{pole}"),
            multiplicity: m,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::text::parse_ratexpr;

    fn e(s: &str) -> RatExpr {
        parse_ratexpr(s).unwrap()
    }

    #[test]
    fn two_simple_poles() {
        let pf = partial_fractions(&e("1/(s*(s-1))"), Var::S, &[e("0"), e("1")]).unwrap();
        assert_eq!(pf.terms[0].1, e("-1"));
        assert_eq!(pf.terms[1].1, e("1"));
        assert!(pf.polynomial_part.is_zero());
    }

    #[test]
    fn double_pole_is_rejected() {
        let err = partial_fractions(&e("1/(s^2*(s-1))"), Var::S, &[e("0"), e("1")]).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::PoleMultiplicity {
                pole: "0".into(),
                multiplicity: 2
            }
        );
    }

    #[test]
    fn missing_pole_is_reported() {
        let err = partial_fractions(&e("1/(s*(s-1))"), Var::S, &[e("0")]).unwrap_err();
        assert!(matches!(err, AlgebraError::PolesIncomplete(_)));
    }

    #[test]
    fn polynomial_part_kept() {
        let pf = partial_fractions(&e("(s^3 + 1)/(s - a)"), Var::S, &[e("a")]).unwrap();
        assert_eq!(pf.terms[0].1, e("a^3 + 1"));
        assert_eq!(pf.polynomial_part.to_ratexpr(Var::S), e("s^2 + a*s + a^2"));
    }

    #[test]
    fn residues() {
        assert_eq!(residue_at(&e("1/(s-2)"), Var::S, &e("2")).unwrap(), e("1"));
        assert!(residue_at(&e("s^2"), Var::S, &e("0")).unwrap().is_zero());
        let p2 = e("lambda*(lambda-1)*mu/(s*(s-1)*(s-lambda))");
        assert_eq!(residue_at(&p2, Var::S, &e("lambda")).unwrap(), e("mu"));
        assert!(residue_at(&e("1/(s-1)^2"), Var::S, &e("1")).is_err());
    }
}
