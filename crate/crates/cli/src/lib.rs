//! Ideal-file parsing, fixtures and command drivers for the `csmcalc` binary.

pub mod bench;
pub mod error;
pub mod fixtures;
pub mod parse;
pub mod run;

pub use error::CliError;
pub use parse::{parse_ideal_file, render_ideal, SchemeInput};
pub use run::{run, Algorithm, RunConfig, RunResult};
