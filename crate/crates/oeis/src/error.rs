use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid sequence id {0:?}: expected 'A' followed by 6 digits")]
    InvalidId(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: index {found} breaks contiguity (expected {expected})")]
    Gap { line: usize, expected: i64, found: i64 },
    #[error("{0} is not cached and fetching is disabled")]
    CacheMissOffline(String),
    #[error("fetching {id}: {message}")]
    Network { id: String, message: String },
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("alignment needs at least {need} values, got {got}")]
    TooShort { need: usize, got: usize },
    #[error("ambiguous alignment: shifts {0:?} all fit")]
    Ambiguous(Vec<i64>),
    #[error("b-file {id} covers indices {first}..={last}, which does not span {lo}..={hi}")]
    RangeUncovered { id: String, first: i64, last: i64, lo: i64, hi: i64 },
    #[error(transparent)]
    Core(#[from] rcomp_core::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
