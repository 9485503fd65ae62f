//! Command-line front end for `adjoint-core`.
//!
//! Exit status: 0 on success, 1 when an identity or cross-check fails (a
//! counterexample naming the series, the degree and both sides is printed),
//! 2 on usage and domain errors (`{"error": CODE, "detail": ...}`).

pub mod command;
pub mod error;
pub mod payload;
pub mod run;

pub use command::{parse_command, parse_command_with, Command, Format, Identity, Method, Point, Verb};
pub use error::CliError;
pub use run::{run, run_command, Outcome, Output};
