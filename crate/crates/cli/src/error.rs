use amalgam_core::Error;
use thiserror::Error;

use crate::dsl::{ParseError, Pos};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("cannot resolve `{name}`: {message}")]
    Resolution {
        name: String,
        message: String,
        pos: Option<Pos>,
    },
    #[error("{error}")]
    Engine { error: Error, pos: Option<Pos> },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Engine { error, pos: None }
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Resolution { .. } => "ResolutionError",
            CliError::Engine { error, .. } => error.kind(),
            CliError::Usage(_) => "UsageError",
            CliError::Io(_) => "IoError",
        }
    }

    pub fn pos(&self) -> Option<Pos> {
        match self {
            CliError::Parse(p) => Some(Pos {
                line: p.line,
                col: p.col,
            }),
            CliError::Resolution { pos, .. } | CliError::Engine { pos, .. } => *pos,
            _ => None,
        }
    }
}
