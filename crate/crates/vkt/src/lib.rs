//! Command line front end, file formats and fixtures for `vkt-core`.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod output;

pub use cli::run;
pub use error::CliError;
pub use output::{Field, Format, Report};
