use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),

    #[error("partition {partition} has length {len}, which exceeds {max}")]
    PartitionTooLong {
        partition: String,
        len: usize,
        max: usize,
    },

    #[error("componentwise sum {0:?} is not weakly decreasing")]
    NonPartitionSum(Vec<usize>),

    #[error("brute-force tableau count refused: weight {weight} exceeds cap {cap}")]
    EnumerationCap { weight: usize, cap: usize },

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("expected a homogeneous element of degree {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: String },

    #[error("total class must have constant term 1")]
    NotUnipotent,

    #[error("class series component {index} is not homogeneous of degree {index}")]
    InhomogeneousComponent { index: usize },

    #[error("invalid setup: {0}")]
    InvalidSetup(String),

    #[error("unsupported product: {0}")]
    UnsupportedProduct(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("missing intersection numbers for: {}", .0.join(", "))]
    MissingMonomials(Vec<String>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
