use thiserror::Error;

/// Crate-wide error type.  The CLI maps these onto exit codes: input and
/// data problems are "data errors", violated preconditions and failed
/// internal assertions are "assertion failures".
#[derive(Error, Debug)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position in the line.
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    /// Malformed edge-list input; `line` is 1-based.
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    /// Structurally invalid argument (out-of-range vertex, duplicate vertex,
    /// deleting a missing edge, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation was called outside its contract (disconnected graph
    /// where a connected one is required, non-1-walk-regular sweep, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A shipped data file failed its validation checks.
    #[error("data validation failed [{check}]: {msg}")]
    DataValidation { check: String, msg: String },

    /// Interpolation produced a polynomial that disagrees with a
    /// verification evaluation, i.e. a supplied degree bound was too small.
    #[error("degree bound exceeded: {0}")]
    DegreeBound(String),

    /// Graph exceeds a configured size bound (canonical labeling).
    #[error("graph too large: {0}")]
    TooLarge(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that should be reported as bad input data rather
    /// than as a failed mathematical assertion.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::Graph6 { .. }
                | Error::EdgeList { .. }
                | Error::InvalidInput(_)
                | Error::DataValidation { .. }
                | Error::TooLarge(_)
                | Error::Io(_)
        )
    }
}
