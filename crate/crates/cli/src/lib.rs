//! Campaign runner, result cache and report formats behind the `sqfpow`
//! command.

pub mod cache;
pub mod campaign;
pub mod commands;
pub mod input;
pub mod output;

use std::fmt::Display;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sqfpow_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Budget exhaustion maps to exit code 3 like a skipped campaign row;
    /// everything else is a usage or input failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(sqfpow_core::Error::BudgetExceeded(_)) => 3,
            _ => 1,
        }
    }
}

pub(crate) fn serialize_display<T: Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
