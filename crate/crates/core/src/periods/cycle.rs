//! Branch points of `η² = s − Q(ξ)` and periods over cycles joining two of
//! them.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64 as C;
use num_traits::Float;
use super::quad::{gauss_legendre, tanh_sinh};
use super::NumericConfig;
use crate::algebra::rational::to_f64;
use crate::algebra::Rational;
use crate::error::{Error, NumericError};
use crate::numeric::{horner, poly_roots};
use crate::picard_fuchs::FormKind;

fn c(x: f64) -> C {
    C::new(x, 0.0)
}

/// `Q(ξ) = (3ξ⁴ − 4(a+1)ξ³ + 6aξ²)/(2a−1)` at a fixed rational `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fiber {
    pub a: f64,
    /// `−3/(2a−1)`, so that `s − Q = lead · Π(ξ − e_k)`.
    lead: f64,
}

impl Fiber {
    pub fn new(a: &Rational) -> Result<Self, Error> {
        let af = to_f64(a);
        let k = 2.0 * af - 1.0;
        if k == 0.0 || !af.is_finite() {
            return Err(Error::Structure(format!("a = {a} makes Q undefined")));
        }
        Ok(Fiber { a: af, lead: -3.0 / k })
    }

    pub fn q(&self, xi: C) -> C {
        let k = 2.0 * self.a - 1.0;
        horner(&[c(0.0), c(0.0), c(6.0 * self.a), c(-4.0 * (self.a + 1.0)), c(3.0)], xi) / k
    }

    /// Numerator of the form: `1` or `ξ(3ξ − 2(a+1))`.
    pub fn numerator(&self, form: FormKind, xi: C) -> C {
        match form {
            FormKind::First => c(1.0),
            FormKind::Second => xi * (xi * 3.0 - 2.0 * (self.a + 1.0)),
        }
    }

    /// The four roots of `Q(ξ) = s`, ordered by real then imaginary part.
    pub fn branch_points(&self, s: C) -> Result<[C; 4], Error> {
        let k = 2.0 * self.a - 1.0;
        let coeffs = [-s * k, c(0.0), c(6.0 * self.a), c(-4.0 * (self.a + 1.0)), c(3.0)];
        let roots = poly_roots(&coeffs)?;
        let r: [C; 4] = roots
            .try_into()
            .map_err(|_| NumericError::Invalid("expected four roots".into()))?;
        let scale = r.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for i in 0..4 {
            for j in i + 1..4 {
                if (r[i] - r[j]).norm() < 1e-6 * scale {
                    return Err(NumericError::CollidingRoots(format!(
                        "s = {s} is (numerically) a critical value: {} ≈ {}",
                        r[i], r[j]
                    ))
                    .into());
                }
            }
        }
        Ok(r)
    }

    /// `s − Q(ξ)` from its roots.
    fn eta2(&self, roots: &[C; 4], xi: C) -> C {
        roots.iter().fold(c(self.lead), |acc, e| acc * (xi - e))
    }
}

pub fn branch_points(a: &Rational, s: C) -> Result<[C; 4], Error> {
    Fiber::new(a)?.branch_points(s)
}

/// Principal square root, with values within rounding of the negative real
/// axis sent to the upper half-plane.
pub fn principal_sqrt(z: C) -> C {
    if z.re < 0.0 && z.im.abs() <= 1e-12 * z.norm() {
        C::new(0.0, Float::sqrt(-z.re))
    } else {
        z.sqrt()
    }
}

/// Continues `√f(t)` from `w0 = √f(t0)` to `t1`, with steps short enough
/// that `arg f` changes by less than `π/4` per step, checked at the
/// step midpoint.
pub(crate) fn track_sqrt(
    f: &dyn Fn(f64) -> C,
    t0: f64,
    t1: f64,
    w0: C,
) -> Result<C, NumericError> {
    let mut t = t0;
    let mut w = w0;
    let mut r = f(t0);
    let mut dt = t1 - t0;
    let mut guard = 0;
    while t != t1 {
        guard += 1;
        if guard > 100_000 {
            return Err(NumericError::StepCollapse(format!("square root continuation at t = {t}")));
        }
        let tn = if (t1 - t).abs() <= dt.abs() { t1 } else { t + dt };
        let rn = f(tn);
        let rm = f((t + tn) / 2.0);
        let (q1, q2) = (rm / r, rn / rm);
        if !(q1.is_finite() && q2.is_finite()) || q1.arg().abs() > PI / 8.0 || q2.arg().abs() > PI / 8.0 {
            dt /= 2.0;
            if dt.abs() < 1e-14 {
                return Err(NumericError::StepCollapse(format!(
                    "square root continuation near a zero at t = {t}"
                )));
            }
            continue;
        }
        let root = rn.sqrt();
        w = if (root - w).norm() <= (root + w).norm() { root } else { -root };
        t = tn;
        r = rn;
        dt *= 2.0;
    }
    Ok(w)
}

/// Cycle over the lift of a path from branch point `from` to branch point
/// `to` (indices into the ordered branch points), through `waypoints`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclePath {
    pub from: usize,
    pub to: usize,
    /// Interior vertices; empty means the straight segment.
    pub waypoints: Vec<C>,
}

impl CyclePath {
    pub fn straight(from: usize, to: usize) -> Self {
        CyclePath { from, to, waypoints: Vec::new() }
    }

    pub fn reversed(&self) -> Self {
        let mut w = self.waypoints.clone();
        w.reverse();
        CyclePath { from: self.to, to: self.from, waypoints: w }
    }
}

/// A period with both quadrature results.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeriodValue {
    pub value: C,
    /// Gauss–Legendre after `ξ = e + (p−e)v²` on the end segments.
    pub gauss: C,
    /// Tanh-sinh in the linear parameter.
    pub tanh_sinh: C,
    /// `|gauss − tanh_sinh| / |gauss|`.
    pub delta: f64,
    /// `η` at the midpoint of the chord, which fixes the sheet.
    pub anchor: C,
}

#[derive(Clone, Copy)]
enum Scheme {
    Gauss,
    TanhSinh,
}

struct Integrand<'a> {
    fiber: &'a Fiber,
    roots: &'a [C; 4],
    form: FormKind,
}

impl Integrand<'_> {
    /// `∫_e^p P dξ/η` where `e` is the branch point `idx` and `η(p) = eta_p`.
    fn from_branch_point(
        &self,
        idx: usize,
        p: C,
        eta_p: C,
        rule: &[(f64, f64)],
        scheme: Scheme,
    ) -> Result<C, NumericError> {
        let e = self.roots[idx];
        let d = p - e;
        let lead = self.fiber.lead;
        let others: Vec<C> = (0..4).filter(|k| *k != idx).map(|k| self.roots[k]).collect();
        let rest = |xi: C| others.iter().fold(c(lead) * d, |acc, r| acc * (xi - r));
        let xi_of = |t: f64| match scheme {
            Scheme::Gauss => e + d * (t * t),
            Scheme::TanhSinh => e + d * t,
        };
        // η = v·σ (Gauss) or √u·σ (tanh-sinh), σ² = lead·d·Π_{k≠idx}(ξ − e_k)
        let sigma2 = |t: f64| rest(xi_of(t));
        let mut t_prev = 1.0;
        let mut sigma = eta_p;
        let mut acc = c(0.0);
        for &(t, w) in rule {
            sigma = track_sqrt(&sigma2, t_prev, t, sigma)?;
            t_prev = t;
            let xi = xi_of(t);
            let p_xi = self.fiber.numerator(self.form, xi);
            let f = match scheme {
                Scheme::Gauss => d * p_xi * 2.0 / sigma,
                Scheme::TanhSinh => d * p_xi / (sigma * Float::sqrt(t)),
            };
            acc += f * w;
        }
        Ok(acc)
    }

    /// `∫_{p0}^{p1} P dξ/η` between regular points, `η(p0) = eta0`.
    fn between(&self, p0: C, p1: C, eta0: C, rule: &[(f64, f64)]) -> Result<C, NumericError> {
        let d = p1 - p0;
        let eta2 = |u: f64| self.fiber.eta2(self.roots, p0 + d * u);
        let mut u_prev = 0.0;
        let mut eta = eta0;
        let mut acc = c(0.0);
        for &(u, w) in rule.iter().rev() {
            eta = track_sqrt(&eta2, u_prev, u, eta)?;
            u_prev = u;
            acc += d * self.fiber.numerator(self.form, p0 + d * u) / eta * w;
        }
        Ok(acc)
    }
}

fn converge(
    mut eval: impl FnMut(usize) -> Result<C, NumericError>,
    levels: usize,
    tol: f64,
) -> Result<C, NumericError> {
    let mut prev = eval(0)?;
    for level in 1..levels {
        let next = eval(level)?;
        if (next - prev).norm() <= tol * next.norm().max(f64::MIN_POSITIVE) {
            return Ok(next);
        }
        prev = next;
    }
    Ok(prev)
}

/// Period of `form` over `cycle` on the fiber over `s`, given the branch
/// points. `anchor` fixes `η` at the chord midpoint; by default the
/// principal square root is used.
pub fn period_on_roots(
    fiber: &Fiber,
    roots: &[C; 4],
    form: FormKind,
    cycle: &CyclePath,
    anchor: Option<C>,
    cfg: &NumericConfig,
) -> Result<PeriodValue, Error> {
    cfg.validate()?;
    if cycle.from == cycle.to || cycle.from > 3 || cycle.to > 3 {
        return Err(NumericError::Invalid(format!(
            "cycle needs two distinct branch points, got {} and {}",
            cycle.from, cycle.to
        ))
        .into());
    }
    let (ei, ej) = (roots[cycle.from], roots[cycle.to]);
    let mid = (ei + ej) / 2.0;
    let anchor = anchor.unwrap_or_else(|| principal_sqrt(fiber.eta2(roots, mid)));
    let mut pts: Vec<C> = cycle.waypoints.clone();
    if pts.is_empty() {
        pts.push(mid);
    }
    // η at the waypoints, continued from the chord midpoint
    let mut etas = Vec::with_capacity(pts.len());
    let line = |p0: C, p1: C| move |u: f64| fiber.eta2(roots, p0 + (p1 - p0) * u);
    etas.push(track_sqrt(&line(mid, pts[0]), 0.0, 1.0, anchor)?);
    for k in 1..pts.len() {
        let e = track_sqrt(&line(pts[k - 1], pts[k]), 0.0, 1.0, etas[k - 1])?;
        etas.push(e);
    }
    let ig = Integrand { fiber, roots, form };
    let last = pts.len() - 1;
    let total = |rule: &[(f64, f64)], scheme: Scheme| -> Result<C, NumericError> {
        let mut acc = ig.from_branch_point(cycle.from, pts[0], etas[0], rule, scheme)?;
        for k in 0..last {
            acc += ig.between(pts[k], pts[k + 1], etas[k], rule)?;
        }
        acc -= ig.from_branch_point(cycle.to, pts[last], etas[last], rule, scheme)?;
        Ok(acc * 2.0)
    };
    let tol = cfg.quadrature_tol;
    let gauss = converge(|l| total(&gauss_legendre(16 << l), Scheme::Gauss), 6, tol)?;
    let ts = converge(
        |l| total(&tanh_sinh(0.5 / (1 << l) as f64), Scheme::TanhSinh),
        7,
        tol,
    )?;
    let delta = (gauss - ts).norm() / gauss.norm().max(f64::MIN_POSITIVE);
    if delta > cfg.scheme_tol {
        return Err(NumericError::SchemeDisagreement {
            a: format!("{gauss}"),
            b: format!("{ts}"),
            delta,
        }
        .into());
    }
    Ok(PeriodValue { value: gauss, gauss, tanh_sinh: ts, delta, anchor })
}

/// `∮ form` over `cycle` on the fiber over `s` of the family at `a`.
pub fn period_integral(
    a: &Rational,
    s: C,
    form: FormKind,
    cycle: &CyclePath,
    cfg: &NumericConfig,
) -> Result<PeriodValue, Error> {
    let fiber = Fiber::new(a)?;
    let roots = fiber.branch_points(s)?;
    period_on_roots(&fiber, &roots, form, cycle, None, cfg)
}

/// Follows a straight-chord cycle and its sheet as `s` moves.
#[derive(Clone, Debug)]
pub struct PeriodTracker {
    fiber: Fiber,
    pub s: C,
    pub roots: [C; 4],
    pub pair: (usize, usize),
    pub anchor: C,
}

impl PeriodTracker {
    pub fn new(a: &Rational, s: C, pair: (usize, usize)) -> Result<Self, Error> {
        let fiber = Fiber::new(a)?;
        let roots = fiber.branch_points(s)?;
        let mid = (roots[pair.0] + roots[pair.1]) / 2.0;
        let anchor = principal_sqrt(fiber.eta2(&roots, mid));
        let t = PeriodTracker { fiber, s, roots, pair, anchor };
        t.check_clearance()?;
        Ok(t)
    }

    fn check_clearance(&self) -> Result<(), Error> {
        let (e0, e1) = (self.roots[self.pair.0], self.roots[self.pair.1]);
        let len = (e1 - e0).norm();
        for (k, r) in self.roots.iter().enumerate() {
            if k == self.pair.0 || k == self.pair.1 {
                continue;
            }
            let u = ((r - e0) * (e1 - e0).conj()).re / (len * len);
            let closest = e0 + (e1 - e0) * u.clamp(0.0, 1.0);
            if (r - closest).norm() < 0.05 * len {
                return Err(NumericError::RootPairing(format!(
                    "branch point {r} approaches the chord at s = {}",
                    self.s
                ))
                .into());
            }
        }
        Ok(())
    }

    fn step(&mut self, s: C, depth: u32) -> Result<(), Error> {
        let new = self.fiber.branch_points(s)?;
        let mut matched = [C::new(0.0, 0.0); 4];
        let mut used = [false; 4];
        let mut ambiguous = false;
        for (k, old) in self.roots.iter().enumerate() {
            let mut d: Vec<(f64, usize)> = new.iter().enumerate().map(|(j, z)| ((z - old).norm(), j)).collect();
            d.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(core::cmp::Ordering::Equal));
            if d[0].0 > 0.25 * d[1].0 || used[d[0].1] {
                ambiguous = true;
                break;
            }
            used[d[0].1] = true;
            matched[k] = new[d[0].1];
        }
        let mid_old = (self.roots[self.pair.0] + self.roots[self.pair.1]) / 2.0;
        let r_old = self.fiber.eta2(&self.roots, mid_old);
        let mid = (matched[self.pair.0] + matched[self.pair.1]) / 2.0;
        let r_new = self.fiber.eta2(&matched, mid);
        if ambiguous || (r_new / r_old).arg().abs() > PI / 4.0 {
            if depth > 20 {
                return Err(NumericError::RootPairing(format!("tracking to s = {s}")).into());
            }
            let half = (self.s + s) / 2.0;
            self.step(half, depth + 1)?;
            return self.step(s, depth + 1);
        }
        let root = r_new.sqrt();
        self.anchor = if (root - self.anchor).norm() <= (root + self.anchor).norm() { root } else { -root };
        self.roots = matched;
        self.s = s;
        self.check_clearance()
    }

    /// Moves to `s` along a straight line.
    pub fn move_to(&mut self, s: C) -> Result<(), Error> {
        self.step(s, 0)
    }

    pub fn period(&self, form: FormKind, cfg: &NumericConfig) -> Result<PeriodValue, Error> {
        let cycle = CyclePath::straight(self.pair.0, self.pair.1);
        period_on_roots(&self.fiber, &self.roots, form, &cycle, Some(self.anchor), cfg)
    }
}

/// Evenly spaced points on the circle `|z − center| = r`, starting at
/// `center + r`.
pub(crate) fn circle(center: C, r: f64, n: usize) -> Vec<C> {
    (0..n)
        .map(|k| center + C::from_polar(r, 2.0 * PI * k as f64 / n as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn branch_points_at_three() {
        let r = branch_points(&int(3), c(0.5)).unwrap();
        let bounds = [(-1.0, 0.0), (0.0, 1.0), (1.0, 3.0), (3.0, 5.0)];
        let fiber = Fiber::new(&int(3)).unwrap();
        for (z, (lo, hi)) in r.iter().zip(bounds) {
            assert!(z.im.abs() < 1e-12 && z.re > lo && z.re < hi, "{z}");
            assert!((fiber.q(*z) - 0.5).norm() <= 1e-12);
        }
    }

    #[test]
    fn critical_value_is_rejected() {
        assert!(branch_points(&int(3), c(0.0)).is_err());
        assert!(branch_points(&int(3), c(1.0)).is_err());
        assert!(branch_points(&rat(1, 2), c(0.3)).is_err());
    }

    #[test]
    fn sqrt_tracking_follows_the_branch() {
        // √(e^{iθ}) along θ ∈ [0, 2π] ends at −1
        let f = |t: f64| C::from_polar(1.0, 2.0 * PI * t);
        let w = track_sqrt(&f, 0.0, 1.0, c(1.0)).unwrap();
        assert!((w + 1.0).norm() < 1e-12);
    }

    #[test]
    fn elliptic_integral_check() {
        // a = 3, s = 1/2: both schemes agree and the value is finite
        let cfg = NumericConfig::default();
        let p = period_integral(&int(3), c(0.5), FormKind::First, &CyclePath::straight(1, 2), &cfg).unwrap();
        assert!(p.value.norm() > 0.1 && p.delta < 1e-10, "{p:?}");
    }
}
