//! File formats, run records and the command-line driver for `gqaoa-core`.
//!
//! - [`graph_file`]: the line-oriented graph format and preset/file resolution.
//! - [`circuit_text`]: one native gate per line, as emitted by `gqaoa compile`.
//! - [`report`]: JSON run records, tidy CSV and never-overwriting output files.
//! - [`commands`]: the `solve`, `optimize`, `fairness`, `draws` and `compile`
//!   subcommands.

pub mod circuit_text;
pub mod commands;
mod error;
pub mod graph_file;
pub mod report;

pub use error::CliError;
