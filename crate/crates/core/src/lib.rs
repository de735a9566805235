//! Exact and numerical verification tools for algebraic Painlevé VI
//! solutions and the Picard–Fuchs equations of a quartic family of
//! elliptic curves.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod fuchs;
pub mod garnier_pvi;
pub mod numeric;
pub mod periods;
pub mod picard_fuchs;

pub use error::{Error, NumericError};
