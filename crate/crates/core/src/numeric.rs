//! Floating-point polynomial roots (Aberth–Ehrlich iteration).

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::NumericError;

pub fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Value and first derivative.
pub fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of `Σ coeffs[i] z^i`, sorted by real part then
/// imaginary part.
pub fn poly_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, NumericError> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = c[n];
    for x in c.iter_mut() {
        *x /= lead;
    }
    // Fujiwara-style bound for the initial circle
    let radius = (0..n)
        .map(|i| num_traits::Float::powf(c[i].norm(), 1.0 / (n - i) as f64))
        .fold(0.0, f64::max)
        .max(1e-3)
        * 1.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();

    let scale: f64 = c.iter().map(|x| x.norm()).sum();
    let mut converged = false;
    let mut trace = 0.0;
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (p, dp) = horner_with_derivative(&c, z[k]);
            if p.norm() <= f64::EPSILON * scale * num_traits::Float::powi(z[k].norm().max(1.0), n as i32) * 0.5 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        trace = max_step;
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged && trace > 1e-10 {
        return Err(NumericError::RootFinder {
            degree: n,
            last_step: trace,
        });
    }
    // Newton polish
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner_with_derivative(&c, *zk);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(core::cmp::Ordering::Equal))
    });
    Ok(z)
}

pub fn real_poly_roots(coeffs: &[f64]) -> Result<Vec<Complex64>, NumericError> {
    let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    poly_roots(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_known_quartic() {
        // (x-1)(x+2)(x-3)(x-0.5)
        let roots = [1.0, -2.0, 3.0, 0.5];
        let mut coeffs = alloc::vec![1.0];
        for r in roots {
            let mut next = alloc::vec![0.0; coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= r * c;
            }
            coeffs = next;
        }
        let z = real_poly_roots(&coeffs).unwrap();
        let expected = [-2.0, 0.5, 1.0, 3.0];
        for (zi, e) in z.iter().zip(expected) {
            assert!((zi - Complex64::new(e, 0.0)).norm() < 1e-12, "{zi} vs {e}");
        }
    }

    #[test]
    fn complex_pair() {
        let z = real_poly_roots(&[1.0, 0.0, 1.0]).unwrap();
        assert!((z[0] - Complex64::new(0.0, -1.0)).norm() < 1e-13);
        assert!((z[1] - Complex64::new(0.0, 1.0)).norm() < 1e-13);
    }
}
