//! Adapters behind the `sympos` binary. Every verb returns the text it prints, so the
//! binary only parses arguments, sets the working precision and maps errors to exit codes.

pub mod commands;
pub mod config;
pub mod sample;
pub mod verify;

pub use config::{Format, RunConfig};
pub use verify::{run_suite, Counter, Report, Suite};

use std::fmt::Display;

use moves::{MoveError, SfError};
use pinned_groups::{PinnedError, PrecisionSensitive, ScalarError};
use thiserror::Error;
use tp_cells::CellError;
use tropical_zones::ZoneError;
use weyl_core::WeylError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECISION: i32 = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Failure(String),
    #[error("precision exhausted: {0}")]
    Precision(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
            CliError::Precision(_) => EXIT_PRECISION,
        }
    }
}

/// Library errors as seen by the command line.
pub trait Failure: Display {
    fn undecidable(&self) -> bool {
        false
    }
}

impl Failure for WeylError {}

impl Failure for CliError {
    fn undecidable(&self) -> bool {
        matches!(self, CliError::Precision(_))
    }
}
impl Failure for String {}
impl Failure for &str {}

macro_rules! sensitive {
    ($($t:ty),*) => {
        $(impl Failure for $t {
            fn undecidable(&self) -> bool {
                self.is_undecidable()
            }
        })*
    };
}

sensitive!(ScalarError, PinnedError, MoveError, SfError, CellError, ZoneError);

/// Undecidable comparisons become precision errors, anything else is a bad request.
pub fn cli_err<E: Failure>(e: E) -> CliError {
    if e.undecidable() {
        CliError::Precision(e.to_string())
    } else {
        CliError::Usage(e.to_string())
    }
}
