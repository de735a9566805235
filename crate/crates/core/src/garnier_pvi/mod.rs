//! Exact checks that algebraic curves solve `P_VI` and the Garnier system.

mod garnier;
mod params;
mod residual;
mod solution;

pub use garnier::{
    describe_theta, eliminate_mu, garnier_to_pvi_check, hamiltonian_k, sample_thetas,
    verify_garnier_on_curve,
    GarnierPviReport, ThetaOutcome, Witness,
};
pub use params::{alpha_from_theta, Affine, PVIParams, PVIVariant, SIGMA};
pub use residual::{
    bracket_identity_check, bracket_terms, degenerate_parameters, pencil_decompose, pvi_residual_on_curve,
    pvi_rhs, ExclusionSet,
};
pub use solution::{AlgebraicSolution, PARAM};
