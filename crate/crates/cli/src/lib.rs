//! Library side of the `fracspec` command: argument model, CSV/JSON
//! input and output, figure data and the check suites.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod checks;
pub mod config;
pub mod error;
pub mod figures;
pub mod io;
pub mod run;

pub use error::CliError;
