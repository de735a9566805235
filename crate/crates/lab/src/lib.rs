//! Command-line front end for `painleve-core`. Each subcommand runs one
//! verification pipeline and prints a JSON report.

pub mod cli;
pub mod commands;
pub mod report;
pub mod text;

pub use cli::{run, Outcome};
pub use report::{emit_report, Check, Report};
