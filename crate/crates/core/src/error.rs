use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error(
        "ground set of size {n} exceeds the enumeration cap {cap} (raise it with LINCO_MAX_N)"
    )]
    SizeLimit { n: usize, cap: usize },

    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeLimit { degree: usize, cap: usize },

    #[error("dimension mismatch: partition on {partition} elements, composition of {composition}")]
    DimensionMismatch {
        partition: usize,
        composition: usize,
    },

    #[error("inexact division: ({dividend}) / ({divisor})")]
    InexactDivision { dividend: String, divisor: String },

    #[error("unknown polynomial family `{0}`")]
    UnknownFamily(String),

    #[error("no structural product formula for family `{0}`")]
    UnsupportedFamily(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown partition filter `{0}`")]
    UnknownFilter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
