//! File formats, fixtures and the command-line driver for `proxkit-core`.
//!
//! Exit status contract: 0 when every check passes, 1 when a check fails
//! (the report lists witnesses), 2 for unreadable or malformed input.

pub mod cli;
pub mod commands;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod report;

pub use cli::{run, Outcome};
pub use error::CliError;
