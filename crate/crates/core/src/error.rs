use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),

    #[error("offset {offset} is not a residue modulo {modulus}")]
    InvalidOffset { offset: usize, modulus: usize },

    #[error("at least one offset is required")]
    EmptyOffsets,

    #[error("series parameters differ: {0}")]
    Mismatch(String),

    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("rows are not strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<usize>),

    #[error("frobenius rows have different lengths ({top} vs {bottom})")]
    RowLengthMismatch { top: usize, bottom: usize },

    #[error("bead window of size {size} is invalid for modulus {modulus} and {parts} parts")]
    InvalidWindow {
        size: usize,
        modulus: usize,
        parts: usize,
    },

    #[error("partition {0} is not a {1}-core")]
    NotACore(String, usize),

    #[error("quotient has {got} components, expected {expected}")]
    QuotientLength { got: usize, expected: usize },

    #[error("charge vector must sum to zero, sums to {0}")]
    ChargeSum(i64),

    #[error("{0}")]
    UnknownSuite(String),

    #[error("malformed series json: {0}")]
    Json(String),
}
