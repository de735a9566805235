//! Picard–Fuchs equations of the quartic family `η² = s − Q(ξ; a)`.

mod derive;
mod family;
mod lemma;
mod reduce;

pub use derive::{
    derive_pf, derive_pf_with, match_lemma, solution_from_a0, wronskian_form_check, DerivedPF,
    WronskianReport,
};
pub use family::{critical_values, QuarticFamily, XI};
pub use lemma::{lemma_coefficients, FormKind};
pub use reduce::{reduce_form, FormSpec, ReducedVector, Reducer, Reduction, RuleOrder};
