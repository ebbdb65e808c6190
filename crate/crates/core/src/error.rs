use thiserror::Error;

/// Errors surfaced by the library.
///
/// `LemmaViolation` and `Internal` are diagnostics: they indicate that a
/// guarantee the construction relies on did not hold for some input. They are
/// never expected to fire and are reported rather than absorbed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown edge identifier {0}")]
    UnknownEdge(usize),

    #[error("vertex {vertex} has degree {degree}, graph is not subcubic")]
    NotSubcubic { vertex: usize, degree: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),

    #[error("internal check failed: {0}")]
    Internal(String),

    #[error("graph has {n} vertices, above the exhaustive search limit of {limit}")]
    SizeLimit { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
