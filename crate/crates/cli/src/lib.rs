//! Command-line front end for `lsf-core`: argument parsing, input formats,
//! report rendering and the worker pool.

pub mod args;
pub mod commands;
pub mod error;
pub mod formats;
pub mod table;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;
