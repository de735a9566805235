//! Periods substituted into a second-order equation, with derivatives in
//! `s` taken from Cauchy integrals over a small circle.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64 as C;
use num_traits::Float;

use super::cycle::{circle, PeriodTracker};
use super::monodromy::{loop_vertices, monodromy_matrix, Loop, BASE_POINT};
use super::ode::NumericODE;
use super::NumericConfig;
use crate::algebra::{Poly, Rational, Var};
use crate::error::{Error, NumericError};
use crate::fuchs::LinearODE2;
use crate::picard_fuchs::{lemma_coefficients, FormKind};

/// Branch points joined by the cycle, as indices into the ordered roots.
pub const DEFAULT_PAIR: (usize, usize) = (1, 2);

#[derive(Clone, Debug, PartialEq)]
pub struct PfResidual {
    /// `(s, period, relative residual)` per grid point.
    pub points: Vec<(C, C, f64)>,
    pub max: f64,
}

/// `(x, x', x'')` of the tracked period at the tracker's current `s`, from
/// `cfg.cauchy_points` samples on a circle of radius `r`.
pub fn cauchy_jet(tracker: &PeriodTracker, form: FormKind, r: f64, cfg: &NumericConfig) -> Result<[C; 3], Error> {
    let s0 = tracker.s;
    let n = cfg.cauchy_points;
    let x0 = tracker.period(form, cfg)?.value;
    let mut tracker = tracker.clone();
    let ring = circle(s0, r, n);
    let mut d1 = C::new(0.0, 0.0);
    let mut d2 = C::new(0.0, 0.0);
    let mut start = None;
    for (k, &s) in ring.iter().enumerate() {
        tracker.move_to(s)?;
        if k == 0 {
            start = Some((tracker.roots, tracker.anchor));
        }
        let x = tracker.period(form, cfg)?.value;
        let phi = 2.0 * PI * k as f64 / n as f64;
        d1 += x * C::from_polar(1.0, -phi);
        d2 += x * C::from_polar(1.0, -2.0 * phi);
    }
    // closing the circle must return to the starting sheet
    tracker.move_to(ring[0])?;
    if let Some((roots, anchor)) = start {
        let moved = roots.iter().zip(&tracker.roots).any(|(p, q)| (p - q).norm() > 1e-8 * (1.0 + p.norm()));
        if moved || (tracker.anchor - anchor).norm() > (tracker.anchor + anchor).norm() {
            return Err(NumericError::RootPairing(format!("cycle does not close around s = {s0}")).into());
        }
    }
    Ok([x0, d1 / (n as f64 * r), d2 * 2.0 / (n as f64 * r * r)])
}

/// Residual of the reference equation for `form` on its own periods.
pub fn numeric_pf_residual(
    a: &Rational,
    grid: &[C],
    form: FormKind,
    cfg: &NumericConfig,
) -> Result<PfResidual, Error> {
    numeric_pf_residual_with(a, grid, form, &lemma_coefficients(form), DEFAULT_PAIR, cfg)
}

/// Residual of `ode` (in `a` and `s`) on the periods of `form` over the
/// cycle joining the branch points `pair`.
///
/// At each grid point the residual is
/// `|a0 x'' + a1 x' + a2 x| / (|a0 x''| + |a1 x'| + |a2 x|)`.
pub fn numeric_pf_residual_with(
    a: &Rational,
    grid: &[C],
    form: FormKind,
    ode: &LinearODE2,
    pair: (usize, usize),
    cfg: &NumericConfig,
) -> Result<PfResidual, Error> {
    cfg.validate()?;
    let eq = NumericODE::new(&ode.specialize(Var::A, &Poly::constant(a.clone()))?)?;
    let mut points = Vec::with_capacity(grid.len());
    let mut max: f64 = 0.0;
    for &s0 in grid {
        let r = cfg.cauchy_radius_fraction * eq.distance_to_singular(s0);
        let tracker = PeriodTracker::new(a, s0, pair)?;
        let [x0, x1, x2] = cauchy_jet(&tracker, form, r, cfg)?;
        let [c0, c1, c2] = eq.eval(s0);
        let terms = [c0 * x2, c1 * x1, c2 * x0];
        let scale: f64 = terms.iter().map(|t| t.norm()).sum();
        let res = (terms[0] + terms[1] + terms[2]).norm() / scale.max(f64::MIN_POSITIVE);
        max = max.max(res);
        points.push((s0, x0, res));
    }
    Ok(PfResidual { points, max })
}

/// A period vector `(x, x')` at the base point before and after a loop.
#[derive(Clone, Debug, PartialEq)]
pub struct TransportCheck {
    pub before: [C; 2],
    /// Obtained by following the cycle around the loop.
    pub tracked: [C; 2],
    /// `X_γ · before`.
    pub predicted: [C; 2],
    /// `|tracked − predicted| / |before|`.
    pub defect: f64,
}

/// Follows the period of `form` over the cycle `pair` (chosen at `start`)
/// to the base point, around `lp`, and back, and compares the result with
/// the monodromy matrix of the reference equation along the same loop.
pub fn transported_periods(
    a: &Rational,
    form: FormKind,
    pair: (usize, usize),
    start: C,
    lp: &Loop,
    cfg: &NumericConfig,
) -> Result<TransportCheck, Error> {
    cfg.validate()?;
    let eq = NumericODE::new(&lemma_coefficients(form).specialize(Var::A, &Poly::constant(a.clone()))?)?;
    let base = BASE_POINT;
    let mut tracker = PeriodTracker::new(a, start, pair)?;
    tracker.move_to(base)?;
    let r = cfg.cauchy_radius_fraction * eq.distance_to_singular(base);
    let [x, dx, _] = cauchy_jet(&tracker, form, r, cfg)?;
    for s in loop_vertices(&eq, base, lp)? {
        tracker.move_to(s)?;
    }
    let [y, dy, _] = cauchy_jet(&tracker, form, r, cfg)?;
    let m = monodromy_matrix(&eq, base, lp, cfg)?.m;
    let predicted = [m[0][0] * x + m[0][1] * dx, m[1][0] * x + m[1][1] * dx];
    let norm = |v: [C; 2]| Float::sqrt(v[0].norm_sqr() + v[1].norm_sqr());
    let defect = norm([y - predicted[0], dy - predicted[1]]) / norm([x, dx]);
    Ok(TransportCheck { before: [x, dx], tracked: [y, dy], predicted, defect })
}
