//! Picard–Fuchs equations from the reduced classes of `ω`, `∂ω/∂s`,
//! `∂²ω/∂s²`, and their comparison with the reference equations.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::family::{critical_values, QuarticFamily};
use super::reduce::{FormSpec, ReducedVector, Reducer, RuleOrder};
use crate::algebra::{linear_roots, partial_fractions, RatExpr, Rational};
use crate::error::Error;
use crate::fuchs::{LinearODE2, S};
use crate::garnier_pvi::AlgebraicSolution;

/// Output of [`derive_pf`].
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedPF {
    /// Classes of `ω, ∂ω/∂s, ∂²ω/∂s²`.
    pub vectors: [ReducedVector; 3],
    /// Rank of the three classes over ℚ(a, s).
    pub rank: usize,
    /// Normalized equation `a0 x'' + a1 x' + a2 x = 0`.
    pub ode: LinearODE2,
}

fn det3(m: &[[RatExpr; 3]; 3]) -> RatExpr {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    &(&(&m[0][0] * &minor(1, 2, 1, 2)) - &(&m[0][1] * &minor(1, 2, 0, 2)))
        + &(&m[0][2] * &minor(1, 2, 0, 1))
}

fn cross(x: &[RatExpr; 3], y: &[RatExpr; 3]) -> [RatExpr; 3] {
    [
        &(&x[1] * &y[2]) - &(&x[2] * &y[1]),
        &(&x[2] * &y[0]) - &(&x[0] * &y[2]),
        &(&x[0] * &y[1]) - &(&x[1] * &y[0]),
    ]
}

/// Second-order equation satisfied by the periods of a residue-free form.
pub fn derive_pf_with(
    fam: &QuarticFamily,
    form: &FormSpec,
    order: RuleOrder,
) -> Result<DerivedPF, Error> {
    let reducer = Reducer::new(fam)?;
    let forms = [form.clone(), form.ds(), form.ds().ds()];
    let mut vectors: Vec<ReducedVector> = Vec::with_capacity(3);
    for f in &forms {
        let red = reducer.reduce(f, order);
        if !reducer.verify(f, &red) {
            return Err(Error::Structure("reduction certificate failed".into()));
        }
        vectors.push(red.vector);
    }
    let vectors: [ReducedVector; 3] = vectors.try_into().expect("three vectors");
    // columns are the classes; a kernel vector gives the relation
    let rows: [[RatExpr; 3]; 3] = core::array::from_fn(|j| {
        core::array::from_fn(|i| vectors[i].0[j].clone())
    });
    if !det3(&rows).is_zero() {
        return Err(Error::Structure(
            "classes are independent: only a third-order equation exists".into(),
        ));
    }
    let kernel = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| cross(&rows[i], &rows[j]))
        .find(|k| k.iter().any(|x| !x.is_zero()))
        .ok_or_else(|| Error::Structure("rank below two".into()))?;
    let ode = LinearODE2::from_ratexprs(&kernel[2], &kernel[1], &kernel[0])?.normalized();
    Ok(DerivedPF {
        vectors,
        rank: 2,
        ode,
    })
}

pub fn derive_pf(fam: &QuarticFamily, form: &FormSpec) -> Result<DerivedPF, Error> {
    derive_pf_with(fam, form, RuleOrder::LevelFirst)
}

/// `c` with `derived = c · reference`.
pub fn match_lemma(derived: &LinearODE2, reference: &LinearODE2) -> Result<RatExpr, Error> {
    derived.proportionality(reference).ok_or_else(|| {
        let c = RatExpr::new(derived.a0().clone(), reference.a0().clone()).ok();
        let which = match &c {
            Some(c) if !c.contains(S) => {
                let r = |p: &crate::algebra::Poly| RatExpr::from_poly(p.clone());
                if r(derived.a1()) != c * &r(reference.a1()) {
                    "a1"
                } else {
                    "a2"
                }
            }
            _ => "a0",
        };
        Error::Structure(format!("equations are not proportional: {which} differs"))
    })
}

/// Residue structure of `a1/a0` and the Wronskian it determines.
#[derive(Clone, Debug, PartialEq)]
pub struct WronskianReport {
    /// `(pole, residue)` for every finite singular point.
    pub residues: Vec<(RatExpr, RatExpr)>,
    pub t: Option<RatExpr>,
    pub apparent: Option<RatExpr>,
    /// `W = exp(−∫ a1/a0)` up to a constant factor.
    pub wronskian: Option<RatExpr>,
    pub pass: bool,
    pub notes: Vec<String>,
}

/// Checks that `a1/a0 = r0/s + 1/(s−1) + 1/(s−t) − 1/(s−λ)` with
/// `r0 ∈ {0, 1}`, so the Wronskian is `s^(−r0)(s−λ)/((s−1)(s−t))` and its
/// numerator has degree one in `s` with root `λ`.
pub fn wronskian_form_check(ode: &LinearODE2, fam: &QuarticFamily) -> Result<WronskianReport, Error> {
    let mut notes = Vec::new();
    let roots: Vec<RatExpr> = linear_roots(ode.a0(), S)?.into_iter().map(|(r, _)| r).collect();
    let pf = partial_fractions(&ode.p1(), S, &roots)?;
    if !pf.polynomial_part.is_zero() {
        notes.push(String::from("a1/a0 has a polynomial part"));
    }
    let crit = critical_values(fam)?;
    let zero = RatExpr::zero();
    let one = RatExpr::one();
    let t = roots.iter().find(|r| **r != zero && **r != one && crit.contains(r)).cloned();
    let apparent = roots.iter().find(|r| !crit.contains(r)).cloned();
    if t.is_none() {
        notes.push(String::from("no singular point at the critical value t"));
    }
    if apparent.is_none() {
        notes.push(String::from("no singular point off the critical values"));
    }
    let expect = |p: &RatExpr, allowed: &[i64], what: &str, notes: &mut Vec<String>| {
        let r = pf.residue_at(p).cloned().unwrap_or_else(RatExpr::zero);
        if !allowed.iter().any(|k| r == RatExpr::int(*k)) {
            notes.push(format!("residue at {what} is {r}"));
        }
    };
    expect(&zero, &[0, 1], "0", &mut notes);
    expect(&one, &[1], "1", &mut notes);
    if let Some(t) = &t {
        expect(t, &[1], "t", &mut notes);
    }
    if let Some(l) = &apparent {
        expect(l, &[-1], "the apparent point", &mut notes);
    }
    if roots.len() != 4 {
        notes.push(format!("{} finite singular points, expected 4", roots.len()));
    }
    let pass = notes.is_empty();
    let wronskian = pass.then(|| {
        let s = RatExpr::var(S);
        pf.terms.iter().fold(RatExpr::one(), |acc, (p, r)| {
            let k: Rational = -r.as_const().expect("integer residue");
            let e = k.to_integer().try_into().expect("small exponent");
            &acc * &(&s - p).powi(e).expect("nonzero factor")
        })
    });
    Ok(WronskianReport {
        residues: pf.terms.clone(),
        t,
        apparent,
        wronskian,
        pass,
        notes,
    })
}

/// Reads `(λ, t)` off the roots of `a0`: `t` is the root that is a critical
/// value of the family, `λ` the remaining one.
pub fn solution_from_a0(ode: &LinearODE2, fam: &QuarticFamily) -> Result<AlgebraicSolution, Error> {
    let zero = RatExpr::zero();
    let one = RatExpr::one();
    let roots: Vec<RatExpr> = linear_roots(ode.a0(), S)?
        .into_iter()
        .map(|(r, _)| r)
        .filter(|r| *r != zero && *r != one)
        .collect();
    if roots.len() != 2 {
        return Err(Error::Structure(format!(
            "expected two roots besides 0 and 1, found {}",
            roots.len()
        )));
    }
    let crit = critical_values(fam)?;
    let (t, lambda) = match (crit.contains(&roots[0]), crit.contains(&roots[1])) {
        (true, false) => (roots[0].clone(), roots[1].clone()),
        (false, true) => (roots[1].clone(), roots[0].clone()),
        _ => {
            return Err(Error::Structure(
                "cannot tell t from λ: critical values match neither or both roots".into(),
            ))
        }
    };
    Ok(AlgebraicSolution::new(lambda, t))
}
