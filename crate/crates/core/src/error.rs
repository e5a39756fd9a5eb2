use thiserror::Error;

/// Errors raised by the library.
///
/// `Precondition` marks a caller mistake (wrong shape, wrong statistic,
/// malformed input). `NotInImage` marks data that is well formed but lies
/// outside the domain or image of a bijection.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("cell ({row}, {col}) lies outside the shape")]
    CellOutside { row: usize, col: usize },
    #[error("row index {index} out of range for a partition with {rows} rows")]
    RowOutOfRange { index: usize, rows: usize },
    #[error("expected a one-column shape")]
    NotColumn,
    #[error("expected a hook shape")]
    NotHook,
    #[error("expected a rectangular shape")]
    NotRectangle,
    #[error("shapes with {0} rows are not supported (at most 3)")]
    TooManyRows(usize),
    #[error("entries must be distinct")]
    RepeatedEntries,
    #[error("content {0:?} is not a partition")]
    NonPartitionContent(Vec<usize>),
    #[error("binary word is unbalanced: {zeros} zeros and {ones} ones")]
    UnbalancedWord { zeros: usize, ones: usize },
    #[error("empty word")]
    EmptyWord,
    #[error("invalid code {code}: {reason}")]
    InvalidCode { code: String, reason: String },
    #[error("hook code pair violates condition {0}")]
    HookCondition(u8),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not in image: {0}")]
    NotInImage(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
