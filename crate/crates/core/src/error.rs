use std::fmt;

use thiserror::Error;

/// 1-based source position of a diagnostic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("invalid value: {0}")]
    Validity(String),

    #[error("{what} has no image under star")]
    ImageNotRepresentable { what: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("syntax error at {pos}: {message}{}", expected_suffix(.expected))]
    Syntax {
        pos: Position,
        message: String,
        expected: Vec<String>,
    },

    #[error("validity error at {pos}: {message}")]
    LiteralValidity { pos: Position, message: String },

    #[error("type mismatch at {pos}: {message}")]
    TypeMismatch { pos: Position, message: String },

    #[error("evaluation of `{expr}` failed: {source}")]
    Evaluation {
        expr: String,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(", "))
    }
}

impl Error {
    /// Source position, for diagnostics produced by the parser or checker.
    pub fn position(&self) -> Option<Position> {
        match self {
            Error::Syntax { pos, .. }
            | Error::LiteralValidity { pos, .. }
            | Error::TypeMismatch { pos, .. } => Some(*pos),
            Error::Evaluation { source, .. } => source.position(),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
