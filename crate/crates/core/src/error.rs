use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("negative exponent in generator {0}")]
    NegativeExponent(String),
    #[error("ideal is not positively {t}-determined: generator {generator} exceeds it")]
    NotTDetermined { t: String, generator: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a cochain complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotAChainMap(String),
    #[error("sequence is not short exact: {0}")]
    NotExact(String),
    #[error(
        "size guard: {cells} matrix cells exceed the cap of {cap} (set NAK_MAX_CELLS to raise it)"
    )]
    SizeGuard { cells: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
