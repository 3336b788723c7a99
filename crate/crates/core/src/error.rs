use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of a basis function.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("policy error: {0}")]
    Policy(String),

    #[error("validation error: {0}")]
    Validation(String),

    /// Malformed input, located by 1-based line and the offending column.
    #[error("line {line}, column `{column}`: {message}")]
    Parse {
        line: u64,
        column: String,
        message: String,
    },

    #[error("duplicate article_id `{id}` on lines {first_line} and {second_line}")]
    DuplicateId {
        id: String,
        first_line: u64,
        second_line: u64,
    },

    /// A record could not be resolved to a contribution fraction.
    #[error("article `{id}`: {source}")]
    Record {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("no articles")]
    NoArticles,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True when the error means a metric is undefined rather than the input
    /// being malformed.
    pub fn is_undefined_metric(&self) -> bool {
        matches!(self, Error::NoArticles)
    }
}
