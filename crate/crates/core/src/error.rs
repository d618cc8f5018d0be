use std::io;

use thiserror::Error;

/// Errors raised across graph loading, counting and sampling.
#[derive(Debug, Error)]
pub enum MotifError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("inconsistent counts: {0}")]
    Inconsistent(String),

    #[error("cannot draw from an empty distribution")]
    EmptyDistribution,

    #[error("graph has no 3-paths (W = 0)")]
    NoPaths,

    #[error("graph has no centered 3-path candidates (Lambda = 0)")]
    NoCandidates,

    #[error("brute-force enumeration refused: n = {n} exceeds cap {cap}")]
    BruteForceCap { n: usize, cap: usize },

    #[error("usage error: {0}")]
    Usage(String),
}

impl MotifError {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            MotifError::Usage(_) | MotifError::BruteForceCap { .. } => 1,
            MotifError::Io(_) | MotifError::Parse { .. } => 2,
            MotifError::Overflow(_) => 3,
            MotifError::Inconsistent(_) => 3,
            MotifError::EmptyDistribution | MotifError::NoPaths | MotifError::NoCandidates => 1,
        }
    }
}

pub type Result<T, E = MotifError> = std::result::Result<T, E>;
