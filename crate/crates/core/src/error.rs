use thiserror::Error;

/// Errors raised by graph, ideal, Betti and enumeration operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid name {0:?}: expected a nonempty token of alphanumerics or underscores")]
    InvalidName(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("loop at vertex {0}: edges need two distinct endpoints")]
    Loop(String),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),

    #[error("vertex set is not contained in the graph: {0} is missing")]
    NotASubset(String),

    #[error("{what} limited to {limit}, got {actual}")]
    SizeCap {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("result would be the unit ideal")]
    UnitIdeal,

    #[error("unknown variable {0}")]
    UnknownVariable(String),

    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),

    #[error("generator {0} has degree {1}; only degrees 1 and 2 correspond to graphs")]
    NotAGraphGenerator(String, u32),

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("ideal is a complete intersection; the total-rank bound does not apply")]
    CompleteIntersection,

    #[error("need at least {needed} vertices, graph has {actual}")]
    TooFewVertices { needed: usize, actual: usize },

    #[error("{what} must lie in {min}..={max}, got {actual}")]
    OutOfRange {
        what: &'static str,
        min: usize,
        max: usize,
        actual: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for malformed textual input, as opposed to a violated precondition.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::InvalidName(_) | Error::Loop(_) | Error::DuplicateEdge(..)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
