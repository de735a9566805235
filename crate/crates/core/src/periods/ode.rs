//! Taylor-series continuation of `a0 x'' + a1 x' + a2 x = 0` with
//! polynomial coefficients in double precision.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C;

use crate::algebra::rational::to_f64;
use crate::algebra::Rational;
use crate::error::{Error, NumericError};
use crate::fuchs::{LinearODE2, S};
use crate::numeric::{horner, poly_roots};

const MAX_TERMS: usize = 600;

/// An equation whose coefficients are polynomials in `s` only.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericODE {
    /// Ascending coefficients of `a0, a1, a2`.
    pub coeffs: [Vec<C>; 3],
    /// Roots of `a0`.
    pub singular: Vec<C>,
}

impl NumericODE {
    pub fn new(ode: &LinearODE2) -> Result<Self, Error> {
        let conv = |p: &crate::algebra::Poly| -> Result<Vec<C>, Error> {
            let u: Vec<Rational> = p.as_univariate(S).ok_or_else(|| {
                Error::Structure(format!("coefficient {p} involves variables other than s"))
            })?;
            Ok(u.iter().map(|q| C::new(to_f64(q), 0.0)).collect())
        };
        let coeffs = [conv(ode.a0())?, conv(ode.a1())?, conv(ode.a2())?];
        let singular = if coeffs[0].len() > 1 { poly_roots(&coeffs[0])? } else { Vec::new() };
        Ok(NumericODE { coeffs, singular })
    }

    pub fn eval(&self, s: C) -> [C; 3] {
        [horner(&self.coeffs[0], s), horner(&self.coeffs[1], s), horner(&self.coeffs[2], s)]
    }

    pub fn distance_to_singular(&self, s: C) -> f64 {
        self.singular.iter().map(|p| (p - s).norm()).fold(f64::INFINITY, f64::min)
    }

    /// Advances the columns `(x, x')` of `phi` from `z` to `z + h`; `|h|`
    /// must be below the distance to the nearest singular point.
    fn step(&self, z: C, h: C, phi: &mut [[C; 2]; 2], tol: f64) -> Result<(), NumericError> {
        // coefficients of a_k(z + hτ) in τ, scaled so the recurrence is in
        // d_n = c_n h^n
        let scaled: [Vec<C>; 3] = core::array::from_fn(|k| {
            let mut t = taylor_shift(&self.coeffs[k], z);
            let mut hp = if k == 0 { C::new(1.0, 0.0) } else { h.powu(k as u32) };
            for c in t.iter_mut() {
                *c *= hp;
                hp *= h;
            }
            t
        });
        let lead = scaled[0][0];
        if lead.norm() == 0.0 {
            return Err(NumericError::StepCollapse(format!("singular point at {z}")));
        }
        let at = |v: &Vec<C>, i: usize| v.get(i).copied().unwrap_or_default();
        for col in 0..2 {
            let mut d: Vec<C> = vec![phi[0][col], phi[1][col] * h];
            let mut sum_x = d[0] + d[1];
            let mut sum_dx = d[1];
            let mut small = 0;
            let mut n = 0;
            loop {
                let mut acc = C::new(0.0, 0.0);
                for i in 0..=n {
                    let m = n - i;
                    if i >= 1 {
                        acc += at(&scaled[0], i) * d[m + 2] * ((m + 2) * (m + 1)) as f64;
                    }
                    acc += at(&scaled[1], i) * d[m + 1] * (m + 1) as f64;
                    acc += at(&scaled[2], i) * d[m];
                }
                let next = -acc / (lead * ((n + 2) * (n + 1)) as f64);
                d.push(next);
                sum_x += next;
                sum_dx += next * (n + 2) as f64;
                let scale = sum_x.norm() + sum_dx.norm();
                if next.norm() * (n + 2) as f64 <= tol * 1e-4 * scale {
                    small += 1;
                    if small >= 4 {
                        break;
                    }
                } else {
                    small = 0;
                }
                n += 1;
                if n > MAX_TERMS {
                    return Err(NumericError::StepCollapse(format!("Taylor series at {z} did not converge")));
                }
            }
            phi[0][col] = sum_x;
            phi[1][col] = sum_dx / h;
        }
        Ok(())
    }

    /// Transports `phi` along the straight segment `z0 → z1`.
    pub fn transport(&self, z0: C, z1: C, phi: &mut [[C; 2]; 2], tol: f64) -> Result<(), NumericError> {
        let mut z = z0;
        let mut guard = 0;
        while (z1 - z).norm() > 0.0 {
            let dist = self.distance_to_singular(z);
            if dist < 1e-9 {
                return Err(NumericError::StepCollapse(format!("path meets a singular point at {z}")));
            }
            let room = (z1 - z).norm();
            let len = room.min(0.5 * dist);
            let h = if len == room { z1 - z } else { (z1 - z) * (len / room) };
            self.step(z, h, phi, tol)?;
            z = if len == room { z1 } else { z + h };
            guard += 1;
            if guard > 1_000_000 {
                return Err(NumericError::StepCollapse(format!("too many steps near {z}")));
            }
        }
        Ok(())
    }

    /// Transports `phi` along the polygon through `points`.
    pub fn transport_polygon(&self, points: &[C], phi: &mut [[C; 2]; 2], tol: f64) -> Result<(), NumericError> {
        for w in points.windows(2) {
            self.transport(w[0], w[1], phi, tol)?;
        }
        Ok(())
    }
}

/// Ascending Taylor coefficients of `p` about `z`.
fn taylor_shift(p: &[C], z: C) -> Vec<C> {
    let mut c = p.to_vec();
    let n = c.len();
    for k in 0..n {
        for j in (k..n.saturating_sub(1)).rev() {
            let v = c[j + 1];
            c[j] += z * v;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    #[test]
    fn shift_of_a_cubic() {
        // (s+1)^3 about s = 1 is (τ + 2)^3
        let p = [1.0, 3.0, 3.0, 1.0].map(|x| C::new(x, 0.0));
        let t = taylor_shift(&p, C::new(1.0, 0.0));
        let want = [8.0, 12.0, 6.0, 1.0];
        for (a, b) in t.iter().zip(want) {
            assert!((a.re - b).abs() < 1e-12 && a.im == 0.0);
        }
    }

    #[test]
    fn exponential_and_log() {
        // x'' + x = 0 from 0 to π: φ = −I
        let ode = LinearODE2::new(parse_poly("1").unwrap(), parse_poly("0").unwrap(), parse_poly("1").unwrap()).unwrap();
        let n = NumericODE::new(&ode).unwrap();
        let mut phi = [[C::new(1.0, 0.0), C::new(0.0, 0.0)], [C::new(0.0, 0.0), C::new(1.0, 0.0)]];
        n.transport(C::new(0.0, 0.0), C::new(core::f64::consts::PI, 0.0), &mut phi, 1e-12).unwrap();
        assert!((phi[0][0] + 1.0).norm() < 1e-12 && (phi[1][1] + 1.0).norm() < 1e-12);
        assert!(phi[0][1].norm() < 1e-12 && phi[1][0].norm() < 1e-12);
    }
}
