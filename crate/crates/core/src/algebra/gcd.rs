//! Greatest common divisors in ℚ[tower].
//!
//! Recursive scheme: split off the content with respect to the outermost
//! common variable (a gcd one level down), then run the fraction-free
//! subresultant remainder sequence on the primitive parts.

use alloc::vec::Vec;

use super::poly::Poly;
use super::var::Var;

/// Canonical gcd: leading base coefficient 1, or zero when both inputs are.
pub fn gcd(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.monic_base();
    }
    if q.is_zero() {
        return p.monic_base();
    }
    if p.is_const() || q.is_const() {
        return Poly::one();
    }
    if p == q {
        return p.monic_base();
    }
    let vp = p.main_var().unwrap();
    let vq = q.main_var().unwrap();
    if vp < vq {
        return gcd_with_content(p, q.main_coeffs());
    }
    if vq < vp {
        return gcd_with_content(q, p.main_coeffs());
    }
    let v = vp;
    let (cp, pp) = content_and_primitive(p);
    let (cq, qp) = content_and_primitive(q);
    let content = gcd(&cp, &cq);
    let g = subresultant(pp.main_coeffs().to_vec(), qp.main_coeffs().to_vec());
    let g = primitive_vec(g);
    (&content * &Poly::node(v, g)).monic_base()
}

/// Returns `(g, p/g, q/g)`.
pub fn gcd_normalize(p: &Poly, q: &Poly) -> (Poly, Poly, Poly) {
    let g = gcd(p, q);
    if g.is_zero() {
        return (g, Poly::zero(), Poly::zero());
    }
    let pc = p.div_exact(&g).expect("gcd divides its first argument");
    let qc = q.div_exact(&g).expect("gcd divides its second argument");
    (g, pc, qc)
}

/// gcd of `small` (free of the main variable of `coeffs`) with every
/// entry of `coeffs`.
fn gcd_with_content(small: &Poly, coeffs: &[Poly]) -> Poly {
    let mut g = small.clone();
    for c in coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Content with respect to the main variable.
pub fn content(p: &Poly) -> Poly {
    match p.main_var() {
        None => {
            if p.is_zero() {
                Poly::zero()
            } else {
                Poly::one()
            }
        }
        Some(_) => content_of(p.main_coeffs()),
    }
}

fn content_of(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn content_and_primitive(p: &Poly) -> (Poly, Poly) {
    let c = content(p);
    if c.is_one() || c.is_zero() {
        return (Poly::one(), p.clone());
    }
    let pp = p.div_exact(&c).expect("content divides");
    (c, pp)
}

fn primitive_vec(v: Vec<Poly>) -> Vec<Poly> {
    let c = content_of(&v);
    if c.is_one() || c.is_zero() {
        return v;
    }
    v.iter()
        .map(|x| x.div_exact(&c).expect("content divides"))
        .collect()
}

fn degree(v: &[Poly]) -> usize {
    v.len() - 1
}

/// Pseudo-remainder of `a` by `b` (coefficient vectors over the same ring).
pub(crate) fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = degree(b);
    let lc = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    let mut e = (degree(a) + 1).saturating_sub(db) as u32;
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let k = r.len() - 1 - db;
        let lead = r.pop().unwrap();
        for x in r.iter_mut() {
            *x = &*x * lc;
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            r[k + j] = &r[k + j] - &(&lead * bj);
        }
        e = e.saturating_sub(1);
        while r.len() > 1 && r.last().is_some_and(Poly::is_zero) {
            r.pop();
        }
        if r.is_empty() {
            r.push(Poly::zero());
        }
    }
    if e > 0 {
        let f = lc.pow(e);
        for x in r.iter_mut() {
            *x = &*x * &f;
        }
    }
    r
}

fn is_zero_vec(v: &[Poly]) -> bool {
    v.iter().all(Poly::is_zero)
}

/// Last nonzero element of the subresultant remainder sequence (not yet
/// made primitive). Inputs are nonconstant coefficient vectors.
fn subresultant(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let (mut a, mut b) = if degree(&a) >= degree(&b) { (a, b) } else { (b, a) };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let d = (degree(&a) - degree(&b)) as u32;
        let r = pseudo_remainder(&a, &b);
        if is_zero_vec(&r) {
            return b;
        }
        if degree(&r) == 0 {
            return alloc::vec![Poly::one()];
        }
        let divisor = &g * &h.pow(d);
        a = b;
        b = r
            .iter()
            .map(|x| x.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a.last().unwrap().clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant h-update is exact"),
        };
    }
}

/// Squarefree part with respect to `v`.
pub fn squarefree_part(p: &Poly, v: Var) -> Poly {
    let g = gcd(p, &p.derivative(v));
    if g.degree_in(v) == 0 {
        return p.clone();
    }
    p.div_exact(&g).expect("gcd divides")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn a() -> Poly {
        Poly::var(Var::A)
    }
    fn s() -> Poly {
        Poly::var(Var::S)
    }
    fn c(n: i64) -> Poly {
        Poly::int(n)
    }

    #[test]
    fn univariate_gcd() {
        let p = &s().pow(2) - &c(1);
        let q = &s() - &c(1);
        assert_eq!(gcd(&p, &q), q);
        let (g, pc, qc) = gcd_normalize(&p, &q);
        assert_eq!(g, q);
        assert_eq!(pc, &s() + &c(1));
        assert!(qc.is_one());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = s().scale(&int(3));
        assert_eq!(gcd(&p, &Poly::zero()), s());
        assert_eq!(gcd(&Poly::zero(), &p.scale(&rat(-1, 2))), s());
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        // (a s - 1)(s + a^2) and (a s - 1)(s - a)
        let f = &(&a() * &s()) - &c(1);
        let p = &f * &(&s() + &a().pow(2));
        let q = &f * &(&s() - &a());
        assert_eq!(gcd(&p, &q), f.monic_base());
        // content only in a
        let p2 = &(&a() - &c(2)) * &(&s() + &c(1));
        let q2 = &(&a() - &c(2)) * &(&s() + &a());
        assert_eq!(gcd(&p2, &q2), &a() - &c(2));
    }

    #[test]
    fn coprime_gives_one() {
        let p = &s().pow(3) + &a();
        let q = &s().pow(2) - &(&a() * &s());
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn pseudo_remainder_small() {
        // prem(s^2 + 1, 2s + 1) = 4(s^2+1) - (2s+1)(2s-1) = 5
        let r = pseudo_remainder(&[c(1), c(0), c(1)], &[c(1), c(2)]);
        assert_eq!(r, alloc::vec![c(5)]);
    }
}
