//! File formats, pipeline wiring, and commands behind the `sentilex` binary.

pub mod cli;
pub mod commands;
pub mod corpus;
pub mod error;
pub mod gold;
pub mod output;
pub mod pipeline;

pub use error::CliError;
