//! Monodromy of the reference equations by numerical continuation of a
//! fundamental matrix along polygonal loops.
//!
//! The fundamental matrix at the base point is the identity, with rows
//! `(x, x')`. Continuing it along a loop `γ` gives `X_γ`, and loops compose
//! as `X_{γδ} = X_δ X_γ` (first `γ`, then `δ`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64 as C;
use num_traits::Float;

use super::ode::NumericODE;
use super::NumericConfig;
use crate::algebra::rational::to_f64;
use crate::algebra::roots::rational_roots;
use crate::algebra::{Poly, Rational, Var};
use crate::error::{Error, NumericError};
use crate::fuchs::S;
use crate::picard_fuchs::{lemma_coefficients, FormKind, QuarticFamily};

const POLYGON: usize = 64;

/// A loop based at the base point.
#[derive(Clone, Debug, PartialEq)]
pub enum Loop {
    /// Counter-clockwise around one singular point, with a radius of half
    /// the distance to the nearest other singular point.
    Around(C),
    /// Clockwise around every finite singular point.
    Infinity,
    /// Counter-clockwise circle enclosing no singular point.
    Trivial { center: C, radius: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonodromyMatrix {
    pub m: [[C; 2]; 2],
    pub trace: C,
    pub det: C,
    /// Frobenius norm of `M − I`.
    pub distance_to_identity: f64,
}

impl MonodromyMatrix {
    pub fn new(m: [[C; 2]; 2]) -> Self {
        let one = C::new(1.0, 0.0);
        let d = [m[0][0] - one, m[0][1], m[1][0], m[1][1] - one];
        MonodromyMatrix {
            m,
            trace: m[0][0] + m[1][1],
            det: m[0][0] * m[1][1] - m[0][1] * m[1][0],
            distance_to_identity: Float::sqrt(d.iter().map(|z| z.norm_sqr()).sum::<f64>()),
        }
    }

    pub fn identity() -> Self {
        let (o, z) = (C::new(1.0, 0.0), C::new(0.0, 0.0));
        Self::new([[o, z], [z, o]])
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &MonodromyMatrix) -> MonodromyMatrix {
        let (x, y) = (&self.m, &rhs.m);
        Self::new(core::array::from_fn(|i| {
            core::array::from_fn(|j| x[i][0] * y[0][j] + x[i][1] * y[1][j])
        }))
    }
}

fn segment_distance(p: C, z0: C, z1: C) -> f64 {
    let d = z1 - z0;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - z0).norm();
    }
    let u = (((p - z0) * d.conj()).re / len2).clamp(0.0, 1.0);
    (p - (z0 + d * u)).norm()
}

fn polygon(center: C, r: f64, start: f64, clockwise: bool) -> Vec<C> {
    let sign = if clockwise { -1.0 } else { 1.0 };
    let n = if clockwise { 2 * POLYGON } else { POLYGON };
    (0..=n)
        .map(|k| center + C::from_polar(r, start + sign * 2.0 * PI * k as f64 / n as f64))
        .collect()
}

/// Vertices of `lp` as a closed polygon starting and ending at `base`.
pub(crate) fn loop_vertices(ode: &NumericODE, base: C, lp: &Loop) -> Result<Vec<C>, Error> {
    let sing = &ode.singular;
    let (center, r, clockwise, exempt) = match lp {
        Loop::Around(p) => {
            let sep = sing
                .iter()
                .filter(|q| (*q - p).norm() > 1e-9)
                .map(|q| (q - p).norm())
                .fold(f64::INFINITY, f64::min);
            let r = (0.5 * sep).min(0.5 * (base - p).norm());
            (*p, r, false, Some(*p))
        }
        Loop::Infinity => {
            let far = sing.iter().map(|p| p.norm()).fold(base.norm(), f64::max);
            (C::new(0.0, 0.0), 2.0 * far + 2.0, true, None)
        }
        Loop::Trivial { center, radius } => (*center, *radius, false, None),
    };
    if !(r > 0.0 && r.is_finite()) {
        return Err(NumericError::Invalid(format!("loop radius {r} around {center}")).into());
    }
    let dir = if (base - center).norm() > 0.0 { base - center } else { C::new(0.0, -1.0) };
    let start = dir.arg();
    let mut pts = Vec::with_capacity(POLYGON * 2 + 3);
    pts.push(base);
    pts.extend(polygon(center, r, start, clockwise));
    pts.push(base);
    // the spokes must keep away from the singular points they do not encircle
    let spoke = (base, pts[1]);
    for q in sing {
        if exempt.is_some_and(|p| (p - q).norm() <= 1e-9) {
            continue;
        }
        if segment_distance(*q, spoke.0, spoke.1) < 0.25 * r.min(1.0) {
            return Err(NumericError::Invalid(format!(
                "path from the base point {base} passes within reach of the singular point {q}"
            ))
            .into());
        }
    }
    Ok(pts)
}

/// Monodromy of `ode` along `lp` based at `base`.
pub fn monodromy_matrix(ode: &NumericODE, base: C, lp: &Loop, cfg: &NumericConfig) -> Result<MonodromyMatrix, Error> {
    cfg.validate()?;
    if ode.distance_to_singular(base) < 1e-6 {
        return Err(NumericError::Invalid(format!("base point {base} is singular")).into());
    }
    let pts = loop_vertices(ode, base, lp)?;
    let mut phi = MonodromyMatrix::identity().m;
    ode.transport_polygon(&pts, &mut phi, cfg.ode_tol)?;
    Ok(MonodromyMatrix::new(phi))
}

/// What a loop's monodromy should look like.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// `X = I`.
    Identity,
    /// `tr X = 2`, `det X = 1`, `X ≠ I`.
    Unipotent,
    /// `tr X = 0`, `det X = 1`.
    TraceZero,
}

impl Expectation {
    pub fn name(self) -> &'static str {
        match self {
            Expectation::Identity => "identity",
            Expectation::Unipotent => "unipotent, not identity",
            Expectation::TraceZero => "trace 0",
        }
    }

    fn holds(self, m: &MonodromyMatrix, tol: f64) -> bool {
        let one = C::new(1.0, 0.0);
        let det_ok = (m.det - one).norm() <= tol;
        match self {
            Expectation::Identity => m.distance_to_identity <= tol,
            Expectation::Unipotent => {
                det_ok && (m.trace - 2.0).norm() <= tol && m.distance_to_identity > 1e-3
            }
            Expectation::TraceZero => det_ok && m.trace.norm() <= tol,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LoopResult {
    pub name: String,
    /// The encircled point, if finite.
    pub point: Option<Rational>,
    pub matrix: MonodromyMatrix,
    pub expected: Expectation,
    pub pass: bool,
}

/// `X_∞ · X_{p_n} ⋯ X_{p_1}` against the identity, where `p_1, …, p_n`
/// are the finite singular points ordered by increasing `arg(p − base)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductCheck {
    pub order: Vec<String>,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonodromySuite {
    pub a: Rational,
    pub kind: FormKind,
    pub base: C,
    pub loops: Vec<LoopResult>,
    pub product: ProductCheck,
    /// `tr(X_{p_{k+1}} X_{p_k})` for consecutive points in the product
    /// order.
    pub adjacent_traces: Vec<(String, C)>,
    pub pass: bool,
}

impl MonodromySuite {
    pub fn loop_named(&self, name: &str) -> Option<&LoopResult> {
        self.loops.iter().find(|l| l.name == name)
    }

    /// Conjugation invariants: the trace of every loop and of every
    /// adjacent product.
    pub fn invariants(&self) -> Vec<(String, C)> {
        let mut v: Vec<(String, C)> = self.loops.iter().map(|l| (l.name.clone(), l.matrix.trace)).collect();
        v.extend(self.adjacent_traces.iter().cloned());
        v
    }
}

pub const BASE_POINT: C = C::new(0.0, -1.0);

/// Monodromy of the reference equation for `kind` at `a`: loops around
/// `0`, `1`, `t`, the apparent point `λ`, `∞`, and one trivial loop.
pub fn monodromy_suite(a: &Rational, kind: FormKind, cfg: &NumericConfig) -> Result<MonodromySuite, Error> {
    cfg.validate()?;
    let fam = QuarticFamily::at(a.clone())?;
    let t = fam
        .t()
        .as_const()
        .ok_or_else(|| Error::Structure("t(a) is not a constant".into()))?;
    let exact = lemma_coefficients(kind).specialize(Var::A, &Poly::constant(a.clone()))?;
    let a0 = exact
        .a0()
        .as_univariate(S)
        .ok_or_else(|| Error::Structure("a0 is not univariate in s".into()))?;
    let roots = rational_roots(&a0);
    let (zero, one) = (Rational::from_integer(0.into()), Rational::from_integer(1.into()));
    let lambda: Vec<Rational> = roots.iter().filter(|r| **r != zero && **r != one && **r != t).cloned().collect();
    if roots.len() != 4 || lambda.len() != 1 || !roots.contains(&t) {
        return Err(Error::Structure(format!(
            "expected the singular points 0, 1, t, λ at a = {a}, found {}",
            roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    let named = [
        ("0", zero, Expectation::Unipotent),
        ("1", one, Expectation::Unipotent),
        ("t", t, Expectation::Unipotent),
        ("lambda", lambda[0].clone(), Expectation::Identity),
    ];
    let ode = NumericODE::new(&exact)?;
    let base = BASE_POINT;
    let tol = cfg.report_tol;
    let mut loops = Vec::new();
    for (name, p, expected) in named.iter().cloned() {
        let m = monodromy_matrix(&ode, base, &Loop::Around(C::new(to_f64(&p), 0.0)), cfg)?;
        loops.push(LoopResult {
            name: name.to_string(),
            point: Some(p),
            pass: expected.holds(&m, tol),
            matrix: m,
            expected,
        });
    }
    let inf = monodromy_matrix(&ode, base, &Loop::Infinity, cfg)?;
    loops.push(LoopResult {
        name: "infinity".into(),
        point: None,
        pass: Expectation::TraceZero.holds(&inf, tol),
        matrix: inf,
        expected: Expectation::TraceZero,
    });
    // a circle in the lower half-plane between the base point and the axis
    let trivial = Loop::Trivial { center: C::new(0.5, -0.5), radius: 0.2 };
    let triv = monodromy_matrix(&ode, base, &trivial, cfg)?;
    loops.push(LoopResult {
        name: "none".into(),
        point: None,
        pass: Expectation::Identity.holds(&triv, tol),
        matrix: triv,
        expected: Expectation::Identity,
    });

    let mut finite: Vec<&LoopResult> = loops.iter().filter(|l| l.point.is_some()).collect();
    let arg = |l: &LoopResult| (C::new(to_f64(l.point.as_ref().expect("finite")), 0.0) - base).arg();
    finite.sort_by(|x, y| arg(x).partial_cmp(&arg(y)).unwrap_or(core::cmp::Ordering::Equal));
    let mut prod = MonodromyMatrix::identity();
    for l in &finite {
        prod = l.matrix.mul(&prod);
    }
    prod = inf.mul(&prod);
    let product = ProductCheck {
        order: finite.iter().map(|l| l.name.clone()).collect(),
        residual: prod.distance_to_identity,
        pass: prod.distance_to_identity <= tol,
    };
    let adjacent_traces = finite
        .windows(2)
        .map(|w| (format!("{}*{}", w[1].name, w[0].name), w[1].matrix.mul(&w[0].matrix).trace))
        .collect();
    let pass = loops.iter().all(|l| l.pass) && product.pass;
    Ok(MonodromySuite { a: a.clone(), kind, base, loops, product, adjacent_traces, pass })
}
