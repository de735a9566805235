//! Recursive multivariate polynomials over the rationals.
//!
//! A polynomial is either a rational constant or a dense vector of
//! coefficients in its main variable, each coefficient being a polynomial in
//! strictly smaller variables. With the trailing-zero trimming done by every
//! constructor, equal polynomials have identical representations.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use super::var::Var;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Const(Rational),
    Node(Var, Vec<Poly>),
}

impl Poly {
    pub fn zero() -> Poly {
        Poly(Repr::Const(Rational::zero()))
    }

    pub fn one() -> Poly {
        Poly(Repr::Const(Rational::one()))
    }

    pub fn constant(c: Rational) -> Poly {
        Poly(Repr::Const(c))
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(super::rational::int(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly(Repr::Node(v, vec![Poly::zero(), Poly::one()]))
    }

    /// `Σ coeffs[i] · v^i` where every coefficient only involves variables
    /// below `v`. Use [`Poly::from_coeffs_in`] when that is not guaranteed.
    pub(crate) fn node(v: Var, mut coeffs: Vec<Poly>) -> Poly {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.main_var().is_none_or(|w| w < v)));
        match coeffs.len() {
            0 => Poly::zero(),
            1 => coeffs.pop().unwrap(),
            _ => Poly(Repr::Node(v, coeffs)),
        }
    }

    /// `Σ coeffs[i] · v^i` for arbitrary coefficients.
    pub fn from_coeffs_in(v: Var, coeffs: Vec<Poly>) -> Poly {
        if coeffs
            .iter()
            .all(|c| c.main_var().is_none_or(|w| w < v))
        {
            return Poly::node(v, coeffs);
        }
        let x = Poly::var(v);
        let mut acc = Poly::zero();
        for c in coeffs.into_iter().rev() {
            acc = &(&acc * &x) + &c;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_one())
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Const(c) => Some(c),
            Repr::Node(..) => None,
        }
    }

    pub fn is_const(&self) -> bool {
        self.as_const().is_some()
    }

    pub fn main_var(&self) -> Option<Var> {
        match &self.0 {
            Repr::Const(_) => None,
            Repr::Node(v, _) => Some(*v),
        }
    }

    /// Coefficients in the main variable (a single entry for constants).
    pub(crate) fn main_coeffs(&self) -> &[Poly] {
        match &self.0 {
            Repr::Const(_) => core::slice::from_ref(self),
            Repr::Node(_, c) => c,
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        match &self.0 {
            Repr::Const(_) => false,
            Repr::Node(w, c) => *w == v || (*w > v && c.iter().any(|p| p.contains(v))),
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        if let Repr::Node(v, c) = &self.0 {
            out.insert(*v);
            for p in c {
                p.collect_vars(out);
            }
        }
    }

    pub fn degree_in(&self, v: Var) -> usize {
        match &self.0 {
            Repr::Const(_) => 0,
            Repr::Node(w, c) if *w == v => c.len() - 1,
            Repr::Node(w, c) if *w > v => c.iter().map(|p| p.degree_in(v)).max().unwrap_or(0),
            Repr::Node(..) => 0,
        }
    }

    pub fn total_degree(&self) -> usize {
        match &self.0 {
            Repr::Const(_) => 0,
            Repr::Node(_, c) => c
                .iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| i + p.total_degree())
                .max()
                .unwrap_or(0),
        }
    }

    /// Coefficient list with respect to `v`, lowest degree first.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        match &self.0 {
            Repr::Node(w, c) if *w == v => c.clone(),
            Repr::Node(w, c) if *w > v => {
                let views: Vec<Vec<Poly>> = c.iter().map(|p| p.coeffs_in(v)).collect();
                let len = views.iter().map(Vec::len).max().unwrap_or(1);
                (0..len)
                    .map(|j| {
                        let column = views
                            .iter()
                            .map(|view| view.get(j).cloned().unwrap_or_else(Poly::zero))
                            .collect();
                        Poly::node(*w, column)
                    })
                    .collect()
            }
            _ => vec![self.clone()],
        }
    }

    /// Leading coefficient with respect to `v`.
    pub fn leading_coeff_in(&self, v: Var) -> Poly {
        self.coeffs_in(v).pop().unwrap_or_else(Poly::zero)
    }

    /// The rational coefficient reached by repeatedly taking leading
    /// coefficients in the main variable.
    pub fn leading_base_coeff(&self) -> &Rational {
        match &self.0 {
            Repr::Const(c) => c,
            Repr::Node(_, c) => c.last().unwrap().leading_base_coeff(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        match &self.0 {
            Repr::Const(c) => Poly::constant(c * k),
            Repr::Node(v, c) => Poly(Repr::Node(*v, c.iter().map(|p| p.scale(k)).collect())),
        }
    }

    /// Scales so that the leading base coefficient is 1 (zero stays zero).
    pub fn monic_base(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading_base_coeff().clone();
        if lc.is_one() {
            self.clone()
        } else {
            self.scale(&lc.recip())
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Poly {
        match &self.0 {
            Repr::Const(_) => Poly::zero(),
            Repr::Node(w, c) if *w == v => Poly::node(
                v,
                c.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(i, p)| p.scale(&super::rational::int(i as i64)))
                    .collect(),
            ),
            Repr::Node(w, c) if *w > v => {
                Poly::node(*w, c.iter().map(|p| p.derivative(v)).collect())
            }
            Repr::Node(..) => Poly::zero(),
        }
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        match &self.0 {
            Repr::Const(_) => self.clone(),
            Repr::Node(w, c) if *w == v => {
                let mut acc = Poly::zero();
                for p in c.iter().rev() {
                    acc = &(&acc * value) + p;
                }
                acc
            }
            Repr::Node(w, c) if *w > v => {
                Poly::from_coeffs_in(*w, c.iter().map(|p| p.substitute(v, value)).collect())
            }
            Repr::Node(..) => self.clone(),
        }
    }

    /// Evaluates every variable present in `values`.
    pub fn eval_rational(&self, values: &BTreeMap<Var, Rational>) -> Poly {
        match &self.0 {
            Repr::Const(_) => self.clone(),
            Repr::Node(w, c) => {
                let coeffs: Vec<Poly> = c.iter().map(|p| p.eval_rational(values)).collect();
                match values.get(w) {
                    Some(x) => {
                        let mut acc = Poly::zero();
                        for p in coeffs.iter().rev() {
                            acc = &acc.scale(x) + p;
                        }
                        acc
                    }
                    None => Poly::node(*w, coeffs),
                }
            }
        }
    }

    /// Value at a point where every variable is bound.
    pub fn eval_all(&self, values: &BTreeMap<Var, Rational>) -> Option<Rational> {
        self.eval_rational(values).as_const().cloned()
    }

    /// Terms as (exponent map, coefficient), in descending graded
    /// lexicographic order over the global variable order (outermost first).
    pub fn terms(&self) -> Vec<(BTreeMap<Var, u32>, Rational)> {
        let mut out = Vec::new();
        self.collect_terms(&mut BTreeMap::new(), &mut out);
        out.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.values().sum();
            let db: u32 = eb.values().sum();
            db.cmp(&da).then_with(|| {
                for v in Var::ALL.iter().rev() {
                    let x = ea.get(v).copied().unwrap_or(0);
                    let y = eb.get(v).copied().unwrap_or(0);
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                core::cmp::Ordering::Equal
            })
        });
        out
    }

    fn collect_terms(
        &self,
        prefix: &mut BTreeMap<Var, u32>,
        out: &mut Vec<(BTreeMap<Var, u32>, Rational)>,
    ) {
        match &self.0 {
            Repr::Const(c) => {
                if !c.is_zero() {
                    out.push((prefix.clone(), c.clone()));
                }
            }
            Repr::Node(v, c) => {
                for (i, p) in c.iter().enumerate() {
                    if i > 0 {
                        prefix.insert(*v, i as u32);
                    }
                    p.collect_terms(prefix, out);
                    prefix.remove(v);
                }
            }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BTreeMap<Var, u32>, Rational)>) -> Poly {
        let mut acc = Poly::zero();
        for (exps, c) in terms {
            let mut m = Poly::constant(c);
            for (v, e) in exps {
                m = &m * &Poly::var(v).pow(e);
            }
            acc = &acc + &m;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_const() {
            return Some(self.scale(&c.recip()));
        }
        let v = d.main_var().unwrap();
        match self.main_var() {
            None => None,
            Some(w) if w < v => None,
            Some(w) if w > v => {
                let q: Option<Vec<Poly>> =
                    self.main_coeffs().iter().map(|c| c.div_exact(d)).collect();
                Some(Poly::node(w, q?))
            }
            Some(_) => {
                let dc = d.main_coeffs();
                let mut r: Vec<Poly> = self.main_coeffs().to_vec();
                let dd = dc.len() - 1;
                if r.len() - 1 < dd {
                    return None;
                }
                let mut q = vec![Poly::zero(); r.len() - dd];
                let lc = &dc[dd];
                while r.len() > dd {
                    let k = r.len() - 1 - dd;
                    let lead = r.last().unwrap();
                    if !lead.is_zero() {
                        let qk = lead.div_exact(lc)?;
                        for (j, dj) in dc.iter().enumerate() {
                            r[k + j] = &r[k + j] - &(&qk * dj);
                        }
                        q[k] = qk;
                    }
                    r.pop();
                }
                if r.iter().any(|c| !c.is_zero()) {
                    return None;
                }
                Some(Poly::node(v, q))
            }
        }
    }

    /// Univariate view for a polynomial whose only variable is at most `v`.
    pub fn as_univariate(&self, v: Var) -> Option<Vec<Rational>> {
        let vars = self.vars();
        if vars.iter().any(|w| *w != v) {
            return None;
        }
        Some(
            self.coeffs_in(v)
                .iter()
                .map(|c| c.as_const().cloned().unwrap_or_else(Rational::zero))
                .collect(),
        )
    }
}

fn add_vec(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &'a Poly) -> Poly {
        match (&self.0, &rhs.0) {
            (Repr::Const(x), Repr::Const(y)) => Poly::constant(x + y),
            (Repr::Node(v, c), Repr::Const(_)) => {
                let mut c = c.clone();
                c[0] = &c[0] + rhs;
                Poly(Repr::Node(*v, c))
            }
            (Repr::Const(_), Repr::Node(..)) => rhs + self,
            (Repr::Node(v, c), Repr::Node(w, d)) => {
                if v == w {
                    Poly::node(*v, add_vec(c, d))
                } else if v > w {
                    let mut c = c.clone();
                    c[0] = &c[0] + rhs;
                    Poly(Repr::Node(*v, c))
                } else {
                    rhs + self
                }
            }
        }
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        match &self.0 {
            Repr::Const(c) => Poly::constant(-c),
            Repr::Node(v, c) => Poly(Repr::Node(*v, c.iter().map(|p| -p).collect())),
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        match (&self.0, &rhs.0) {
            (Repr::Const(x), Repr::Const(y)) => Poly::constant(x * y),
            (Repr::Node(..), Repr::Const(y)) => self.scale(y),
            (Repr::Const(x), Repr::Node(..)) => rhs.scale(x),
            (Repr::Node(v, c), Repr::Node(w, d)) => {
                if v == w {
                    let mut out = vec![Poly::zero(); c.len() + d.len() - 1];
                    for (i, x) in c.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (j, y) in d.iter().enumerate() {
                            if !y.is_zero() {
                                out[i + j] = &out[i + j] + &(x * y);
                            }
                        }
                    }
                    Poly(Repr::Node(*v, out))
                } else if v > w {
                    Poly(Repr::Node(*v, c.iter().map(|p| p * rhs).collect()))
                } else {
                    rhs * self
                }
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl core::fmt::Debug for Poly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        core::fmt::Display::fmt(self, f)
    }
}
