use alloc::string::String;

use crate::algebra::AlgebraError;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("root finder did not converge for degree {degree} (last relative step {last_step:e})")]
    RootFinder { degree: usize, last_step: f64 },
    #[error("branch points collide: {0}")]
    CollidingRoots(String),
    #[error("quadrature schemes disagree: {a} vs {b} (delta {delta:e})")]
    SchemeDisagreement { a: String, b: String, delta: f64 },
    #[error("root pairing ambiguous on the derivative circle; use a smaller radius ({0})")]
    RootPairing(String),
    #[error("continuation step collapsed near {0}")]
    StepCollapse(String),
    #[error("{0}")]
    Invalid(String),
}

/// Any failure raised by the library.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("{0}")]
    Structure(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}
