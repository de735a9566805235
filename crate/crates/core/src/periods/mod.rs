//! Double-precision periods of the quartic family: branch points, cycle
//! integrals, numerical Picard–Fuchs residuals, and monodromy of the
//! reference equations.

mod cycle;
mod monodromy;
mod ode;
mod pf_residual;
pub mod quad;

use alloc::format;

use crate::error::Error;

pub use cycle::{branch_points, period_integral, period_on_roots, principal_sqrt, CyclePath, Fiber, PeriodTracker, PeriodValue};
pub use monodromy::{
    monodromy_matrix, monodromy_suite, Expectation, BASE_POINT, Loop, LoopResult, MonodromyMatrix, MonodromySuite,
    ProductCheck,
};
pub use ode::NumericODE;
pub use pf_residual::{
    cauchy_jet, numeric_pf_residual, numeric_pf_residual_with, transported_periods, PfResidual, TransportCheck,
    DEFAULT_PAIR,
};

/// Tolerances and precision for every numerical routine.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericConfig {
    /// Only 53 (IEEE double) is supported.
    pub precision_bits: u32,
    /// Relative change between successive quadrature refinements.
    pub quadrature_tol: f64,
    /// Maximum relative disagreement between the two quadrature schemes.
    pub scheme_tol: f64,
    /// Truncation tolerance of the Taylor steps.
    pub ode_tol: f64,
    /// Threshold used when a numerical quantity is reported as pass/fail.
    pub report_tol: f64,
    /// Radius of the derivative circle as a fraction of the distance to
    /// the nearest singular point.
    pub cauchy_radius_fraction: f64,
    pub cauchy_points: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            precision_bits: 53,
            quadrature_tol: 1e-12,
            scheme_tol: 1e-10,
            ode_tol: 1e-12,
            report_tol: 1e-8,
            cauchy_radius_fraction: 0.25,
            cauchy_points: 32,
        }
    }
}

impl NumericConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.precision_bits != 53 {
            return Err(Error::NotApplicable(format!(
                "{}-bit arithmetic (only 53-bit double precision is implemented)",
                self.precision_bits
            )));
        }
        if !(self.cauchy_radius_fraction > 0.0 && self.cauchy_radius_fraction < 1.0) {
            return Err(Error::Structure("cauchy_radius_fraction must lie in (0, 1)".into()));
        }
        if self.cauchy_points < 8 {
            return Err(Error::Structure("cauchy_points must be at least 8".into()));
        }
        Ok(())
    }
}
