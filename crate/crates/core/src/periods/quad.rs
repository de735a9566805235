//! Quadrature rules on `[0, 1]`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Float;

/// Gauss–Legendre nodes and weights on `[0, 1]`, nodes descending.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut x = Float::cos(PI * (i as f64 - 0.25) / (n as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if Float::abs(dx) < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((1.0 + x) / 2.0, w / 2.0));
    }
    out
}

/// Tanh-sinh nodes on `[0, 1]` for step `h`, nodes descending; node `u`
/// is accurate near `0`, where the integrand may be singular.
pub fn tanh_sinh(h: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let kmax = (6.0 / h) as i64;
    for k in (-kmax..=kmax).rev() {
        let tau = k as f64 * h;
        let e = Float::exp(-PI * Float::sinh(tau));
        let u = 1.0 / (1.0 + e);
        let w = h * u * (e / (1.0 + e)) * PI * Float::cosh(tau);
        if u == 0.0 || w < 1e-300 {
            continue;
        }
        if u >= 1.0 {
            continue;
        }
        out.push((u, w));
    }
    out
}
