//! Front end for `lpl-core`: program loading, DOT output, and the commands
//! behind the `lpl` binary.
//!
//! Every command returns an [`Output`] holding what to print and the exit
//! code, so the binary stays a thin wrapper and the commands are testable
//! in-process.

pub mod commands;
pub mod dot;
pub mod source;

use lpl_core::{ParseError, TypeError};

pub use commands::{check, dist, equiv, graph, reduce, DistOptions, GraphOptions, ReduceOptions};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const NOT_EQUIVALENT: u8 = 1;
    pub const TYPE_ERROR: u8 = 2;
    pub const PARSE_ERROR: u8 = 3;
    pub const TRUNCATED: u8 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("the program has no main term")]
    MissingMain,
    #[error("{0}")]
    Type(#[from] TypeError),
}

impl Error {
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Type(_) => exit::TYPE_ERROR,
            Error::Io { .. } | Error::Parse(_) | Error::MissingMain => exit::PARSE_ERROR,
        }
    }
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, ..Default::default() }
    }
}

impl From<Error> for Output {
    fn from(e: Error) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {}\n", e), code: e.exit_code() }
    }
}
