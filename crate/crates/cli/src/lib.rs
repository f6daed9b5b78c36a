//! Command implementations behind the `surplus-cut` binary. Each command
//! returns its output as a string so it can be tested without a process.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod experiment;

pub use commands::{CPolicy, CutOptions, Family, Format, GenParams, Method};
pub use error::{CliError, CliResult, ExitKind};
pub use experiment::{ExperimentOutput, ExperimentRecord, ExperimentSpec, SweepFamily};
