use thiserror::Error;

/// Crate-wide error type. Variants map onto CLI exit codes: usage-shaped
/// errors ([`Error::Usage`], [`Error::Lookup`], [`Error::Structure`],
/// [`Error::Parse`]) exit 2, computation failures exit 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structure(String),

    #[error("lookup error: {0}")]
    Lookup(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("non-hyperbolic holonomy element (|trace| = {trace_abs} <= 2) for {context}")]
    NonHyperbolic { trace_abs: f64, context: String },

    #[error("coordinate sequences diverge at indices {indices:?}")]
    NonCauchy { indices: Vec<u64> },

    #[error("inconsistent observations: {0}")]
    InconsistentObservations(String),

    #[error("invalid coordinate at index {index}: {reason}")]
    Coordinate { index: u64, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad input rather than a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Structure(_) | Error::Lookup(_) | Error::Usage(_) | Error::Parse(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
