use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {id} is outside the ground set of size {ground_size}")]
    InvalidElement { id: usize, ground_size: usize },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("cell ({row}, {col}) is outside the {m}x{n} grid")]
    OutOfBounds {
        row: usize,
        col: usize,
        m: usize,
        n: usize,
    },

    #[error("view has no rows or no columns left")]
    EmptyView,

    #[error("rows {rows:?} are not independent sets of n distinct elements")]
    InvalidRows { rows: Vec<usize> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
