//! Reduction of `P(ξ) dξ / η^(2m+1)` modulo exact forms to the basis
//! `{1, ξ, ξ²} dξ/η`, over ℚ(a, s).
//!
//! With `F = s − Q = η²`,
//!
//! ```text
//! d(G η^(1−2m)) = [G'F + (2m−1)/2 · G Q'] dξ / η^(2m+1).
//! ```
//!
//! A level is removed by splitting `P = A F + B Q'` (Bezout for the coprime
//! pair `F, Q'`) and subtracting `d(2B/(2m−1) · η^(1−2m))`; the `ξ`-degree
//! is lowered by subtracting `d(c ξ^k η^(1−2m))`.
//!
//! The arithmetic runs in ℚ[a, s][ξ] with one running denominator: with
//! `κ = 2a − 1`, both `κF` and `κQ'` have constant leading coefficients in
//! `ξ`, so every division by them is exact polynomial division.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::gcd::gcd;
use crate::algebra::rational::{int, rat};
use crate::algebra::{Poly, RatExpr, Rational, UPoly, Var};
use crate::error::Error;

use super::family::{QuarticFamily, XI};
use super::lemma::FormKind;

/// `P(ξ) dξ / η^(2m+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormSpec {
    pub numerator: UPoly<RatExpr>,
    pub level: u32,
}

impl FormSpec {
    pub fn new(numerator: UPoly<RatExpr>, level: u32) -> Self {
        FormSpec { numerator, level }
    }

    /// `dξ/η` for the first kind, `ξ(3ξ − 2(a+1)) dξ/η` for the second.
    pub fn of_kind(fam: &QuarticFamily, kind: FormKind) -> Self {
        match kind {
            FormKind::First => FormSpec::new(UPoly::constant(RatExpr::one()), 0),
            FormKind::Second => {
                let a1 = fam.a() + &RatExpr::one();
                FormSpec::new(
                    UPoly::new(vec![RatExpr::zero(), a1.scale(&int(-2)), RatExpr::int(3)]),
                    0,
                )
            }
        }
    }

    /// `(3ξ² − 2(a+1))ξ dξ/η`. Its periods satisfy no second-order equation:
    /// the form has a nonzero residue at the points over `ξ = ∞` unless
    /// `a(2a − 1) = 0`.
    pub fn cubic_second_kind(fam: &QuarticFamily) -> Self {
        let a1 = fam.a() + &RatExpr::one();
        FormSpec::new(
            UPoly::new(vec![
                RatExpr::zero(),
                a1.scale(&int(-2)),
                RatExpr::zero(),
                RatExpr::int(3),
            ]),
            0,
        )
    }

    /// `∂/∂s`, using `∂η^(−2m−1)/∂s = −(2m+1)/2 · η^(−2m−3)`.
    pub fn ds(&self) -> FormSpec {
        let k = rat(-(2 * self.level as i64 + 1), 2);
        FormSpec::new(self.numerator.scale(&RatExpr::constant(k)), self.level + 1)
    }
}

/// Class `c0 + c1 ξ + c2 ξ²` (times `dξ/η`).
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedVector(pub [RatExpr; 3]);

impl ReducedVector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(RatExpr::is_zero)
    }

    pub fn add(&self, other: &ReducedVector) -> ReducedVector {
        ReducedVector([
            &self.0[0] + &other.0[0],
            &self.0[1] + &other.0[1],
            &self.0[2] + &other.0[2],
        ])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleOrder {
    /// Remove levels first, lower the degree only at level 0.
    LevelFirst,
    /// At every level lower the degree as far as possible first.
    DegreeFirst,
}

/// One subtracted exact form `d(G η^(1−2j))` with
/// `G = numerator / den`, `numerator ∈ ℚ[a, s][ξ]`, `den ∈ ℚ[a, s]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactPiece {
    pub level: u32,
    pub numerator: Poly,
    pub den: Poly,
}

impl ExactPiece {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `G` with coefficients in ℚ(a, s).
    pub fn g(&self) -> UPoly<RatExpr> {
        UPoly::new(
            self.numerator
                .coeffs_in(XI)
                .into_iter()
                .map(|c| RatExpr::new(c, self.den.clone()).expect("nonzero denominator"))
                .collect(),
        )
    }
}

/// Result with its exact-form certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub vector: ReducedVector,
    pub certificate: Vec<ExactPiece>,
    /// `(c0 + c1ξ + c2ξ²)` times `vector_den`, and that denominator.
    vector_num: Poly,
    vector_den: Poly,
}

pub struct Reducer {
    /// `κ = 2a − 1`.
    kappa: Poly,
    /// `κF`.
    f: Poly,
    /// `κQ'`.
    dq: Poly,
    /// `W/R` with `U·κF + (W/R)·κQ' = 1`.
    w: Poly,
    r: Poly,
}

fn xi() -> Poly {
    Poly::var(XI)
}

fn to_poly(x: &RatExpr, what: &str) -> Result<Poly, Error> {
    if x.is_poly() {
        Ok(x.num().clone())
    } else {
        Err(Error::Structure(format!("{what} must be polynomial in the parameters")))
    }
}

/// `(q, r)` with `p = q·d + r`, for `d` with constant leading coefficient
/// in `ξ`.
fn divmod_xi(p: &Poly, d: &Poly) -> (Poly, Poly) {
    let dc = d.coeffs_in(XI);
    let dd = dc.len() - 1;
    let lc_inv = dc[dd]
        .as_const()
        .expect("constant leading coefficient")
        .recip();
    let mut r = p.coeffs_in(XI);
    if r.len() <= dd {
        return (Poly::zero(), p.clone());
    }
    let mut q = vec![Poly::zero(); r.len() - dd];
    while r.len() > dd {
        let k = r.len() - 1 - dd;
        let lead = r.pop().unwrap().scale(&lc_inv);
        for (j, dj) in dc.iter().enumerate().take(dd) {
            r[k + j] = &r[k + j] - &(&lead * dj);
        }
        q[k] = lead;
    }
    (Poly::from_coeffs_in(XI, q), Poly::from_coeffs_in(XI, r))
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.div_exact(b).is_some() {
        return a.clone();
    }
    if let Some(q) = b.div_exact(a) {
        return &q * a;
    }
    let g = gcd(a, b);
    &a.div_exact(&g).expect("gcd divides") * b
}

impl Reducer {
    pub fn new(fam: &QuarticFamily) -> Result<Self, Error> {
        let a = to_poly(fam.a(), "a")?;
        let kappa = &a.scale(&int(2)) - &Poly::one();
        let x = xi();
        let kq = &(&x.pow(4).scale(&int(3)) - &(&(&a + &Poly::one()).scale(&int(4)) * &x.pow(3)))
            + &(&a.scale(&int(6)) * &x.pow(2));
        let f = &(&kappa * &Poly::var(Var::S)) - &kq;
        let dq = kq.derivative(XI);
        let uf = UPoly::from_poly(&f, XI);
        let udq = UPoly::from_poly(&dq, XI);
        let (g, _, v) = uf.ext_gcd(&udq);
        if g.degree() != Some(0) {
            return Err(Error::Structure("s - Q is not squarefree in ξ".into()));
        }
        let (w, r) = v.scale(&g.lc().recip().expect("unit gcd")).clear_denominators(XI);
        Ok(Reducer { kappa, f, dq, w, r })
    }

    /// `κ^(m+1)` times the numerator of `d(G η^(1−2m))`, times `den(G)`.
    fn exact_numerator(&self, g: &Poly, m: u32) -> Poly {
        &(&g.derivative(XI) * &self.f) + &(g * &self.dq).scale(&rat(2 * m as i64 - 1, 2))
    }

    /// Lowers the `ξ`-degree of `n/den` at level `m`.
    fn lower_degree(&self, n: &mut Poly, den: &Poly, m: u32, cert: &mut Vec<ExactPiece>) {
        let obstructed = 4 * m as usize + 1;
        let mut g = Poly::zero();
        loop {
            let d = n.degree_in(XI);
            if n.is_zero() || d < 3 || d == obstructed {
                break;
            }
            let k = d - 3;
            let xk = xi().pow(k as u32);
            let rel = self.exact_numerator(&xk, m);
            let l: Rational = int(-3 * k as i64 + 6 * (2 * m as i64 - 1));
            let c = n.leading_coeff_in(XI).scale(&l.recip());
            *n = &*n - &(&c * &rel);
            g = &g + &(&(&c * &self.kappa) * &xk);
        }
        if !g.is_zero() {
            cert.push(ExactPiece { level: m, numerator: g, den: den.clone() });
        }
    }

    pub fn reduce(&self, form: &FormSpec, order: RuleOrder) -> Reduction {
        let (mut n, mut den) = form.numerator.clear_denominators(XI);
        let mut cert = Vec::new();
        let mut level = form.level;
        loop {
            if order == RuleOrder::DegreeFirst || level == 0 {
                self.lower_degree(&mut n, &den, level, &mut cert);
            }
            if level == 0 {
                break;
            }
            let (_, b) = divmod_xi(&(&n * &self.w), &self.f);
            let (a, rest) = divmod_xi(&(&(&n * &self.r) - &(&b * &self.dq)), &self.f);
            debug_assert!(rest.is_zero());
            den = &den * &self.r;
            let k = rat(2, 2 * level as i64 - 1);
            cert.push(ExactPiece {
                level,
                numerator: (&b * &self.kappa).scale(&k),
                den: den.clone(),
            });
            n = &(&a - &b.derivative(XI).scale(&k)) * &self.kappa;
            level -= 1;
        }
        debug_assert!(n.degree_in(XI) <= 2);
        let c = n.coeffs_in(XI);
        let coord = |i: usize| {
            c.get(i)
                .map(|x| RatExpr::new(x.clone(), den.clone()).expect("nonzero denominator"))
                .unwrap_or_else(RatExpr::zero)
        };
        Reduction {
            vector: ReducedVector([coord(0), coord(1), coord(2)]),
            certificate: cert,
            vector_num: n,
            vector_den: den,
        }
    }

    /// Checks `Σ_j E_j F^(m−j) = P − (c0 + c1ξ + c2ξ²) F^m`, with `E_j` the
    /// numerator of the `j`-th certificate form, as a polynomial identity
    /// after clearing all denominators.
    pub fn verify(&self, form: &FormSpec, red: &Reduction) -> bool {
        let m = form.level;
        let (p, pden) = form.numerator.clear_denominators(XI);
        let mut l = lcm(&pden, &red.vector_den);
        for piece in &red.certificate {
            l = lcm(&l, &piece.den);
        }
        let over = |d: &Poly| l.div_exact(d).expect("lcm is a multiple");
        // everything times κ^(m+1)·l
        let mut lhs = Poly::zero();
        for piece in &red.certificate {
            if piece.level > m {
                return false;
            }
            let j = piece.level;
            let e = self.exact_numerator(&piece.numerator, j);
            let scale = &over(&piece.den) * &self.kappa.pow(j);
            lhs = &lhs + &(&(&e * &self.f.pow(m - j)) * &scale);
        }
        let rhs = &(&(&p * &over(&pden)) * &self.kappa.pow(m + 1))
            - &(&(&(&red.vector_num * &over(&red.vector_den)) * &self.f.pow(m)) * &self.kappa);
        lhs == rhs
    }
}

/// Reduces `form` and checks the certificate.
pub fn reduce_form(fam: &QuarticFamily, form: &FormSpec, order: RuleOrder) -> Result<Reduction, Error> {
    let r = Reducer::new(fam)?;
    let red = r.reduce(form, order);
    if !r.verify(form, &red) {
        return Err(Error::Structure(format!(
            "reduction certificate failed at level {}",
            form.level
        )));
    }
    Ok(red)
}
