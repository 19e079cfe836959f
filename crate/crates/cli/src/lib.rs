//! Command-line front end: configuration, benchmark orchestration and
//! report files.

pub mod app;
pub mod config;
pub mod error;
pub mod output;

pub use app::{execute, Cli, Command};
pub use config::Settings;
pub use error::CliError;
pub use output::{emit_table, Format};
