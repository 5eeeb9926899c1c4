//! Library side of the `vck` binary: the JSON report type and the
//! subcommand implementations, kept apart from argument parsing so tests can
//! use them directly.

pub mod commands;
pub mod report;
