use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid constraint: {0}")]
    InvalidConstraint(String),

    #[error("{r} has no inverse modulo {m}: gcd({r}, {m}) > 1")]
    NotCoprime { r: u64, m: u64 },

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("enumeration budget of {max_items} compositions exceeded")]
    BudgetExceeded { max_items: u64 },

    #[error("index n = {n} exceeds the configured ceiling {max}")]
    IndexTooLarge { n: u64, max: u64 },

    #[error("n = {n} is outside the supported range {lo}..={hi}")]
    OutOfRange { n: u64, lo: u64, hi: u64 },

    #[error("generating function denominator must have constant term 1")]
    BadDenominator,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidConstraint(msg.into())
    }
}
