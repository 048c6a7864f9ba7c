use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inexact polynomial division: ({dividend}) / ({divisor})")]
    InexactDivision { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("value {value} is not an integer at q = {q}, N = {level}")]
    NonIntegralEvaluation { value: String, q: String, level: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("segments {0} and {1} are not linked")]
    NotLinked(String, String),

    #[error("size limit exceeded: {requested} > {limit}")]
    SizeLimitExceeded { requested: u128, limit: u128 },

    #[error("cuspidal source for `{0}` only determines the leading term")]
    InsufficientCuspidalData(String),

    #[error("invalid cuspidal source: {0}")]
    InvalidSource(String),

    #[error("unsupported multisegment: {0}")]
    UnsupportedMultisegment(String),

    #[error("partitions of different sizes: {0} and {1}")]
    MismatchedSize(u32, u32),

    #[error("ambiguous expansion: partitions {0:?} share an orbit dimension")]
    AmbiguousExpansion(Vec<Vec<u32>>),

    #[error("polynomial is not in the image of the character expansion map: {0}")]
    NotInImage(String),

    #[error("unsupported matrix size {0}")]
    UnsupportedSize(u32),

    #[error("unknown cuspidal symbol `{0}`")]
    UnknownSymbol(String),
}
