use thiserror::Error;

/// Errors produced by automaton construction, parsing and the operations
/// that take user-controlled input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word contains a symbol that is not in the automaton's alphabet.
    #[error("unknown symbol `{symbol}` at position {position}")]
    UnknownSymbol { symbol: String, position: usize },

    /// Two automata were combined but their alphabets differ.
    #[error("alphabet mismatch: `{left}` vs `{right}`")]
    AlphabetMismatch { left: String, right: String },

    /// A structural invariant of an automaton or alphabet is violated.
    #[error("invalid automaton: {0}")]
    Invalid(String),

    /// A parameter is outside the range an operation supports.
    #[error("{0}")]
    OutOfRange(String),

    /// Text-format parse failure.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn out_of_range(msg: impl Into<String>) -> Self {
        Error::OutOfRange(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
