use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    InvalidDimension,

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    WrongArity { expected: usize, got: usize },

    #[error("negative coordinate {value} in item {index}")]
    NegativeCoordinate { index: usize, value: i64 },

    #[error("naive oracle refuses {n} items (limit {limit})")]
    OracleTooLarge { n: u64, limit: u64 },

    #[error("dense table of {cells} cells exceeds budget {budget}")]
    TableTooLarge { cells: u128, budget: u128 },

    #[error(
        "encoding base {base}^{dim} overflows 64 bits; fall back to direct d-dimensional merging"
    )]
    WidthOverflow { base: u128, dim: usize },

    #[error("encoded value {value} does not decode into {dim} digits of base {base}")]
    DecodeOutOfRange { value: u64, base: u64, dim: usize },

    #[error("item {index} is not large: every coordinate is at most gamma * t")]
    NotLarge { index: usize },

    #[error("recursion depth {depth} exceeded guard {limit}")]
    DepthExceeded { depth: usize, limit: usize },

    #[error("gave up after {attempts} attempts: {last}")]
    RetriesExhausted { attempts: usize, last: Box<Error> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
