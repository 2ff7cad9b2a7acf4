//! Script runner, report formats and the built-in example corpus behind the
//! `chowcalc` binary.

pub mod corpus;
pub mod plain;
pub mod report;
pub mod runner;

pub use runner::{combined_exit, run_all, run_script, Failure, Input, ScriptRun};
