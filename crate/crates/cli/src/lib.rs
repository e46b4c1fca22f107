//! Command-line front end: argument grammar, reports and command runners.

pub mod cli;
pub mod commands;
pub mod probe;
pub mod report;

pub use cli::{Cli, Command};
pub use commands::{error_report, run, CliError, Outcome};
pub use report::{AnalysisReport, Body, ExitStatus, Section, Value};
