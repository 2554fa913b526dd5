use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("singular triangular matrix: zero diagonal entry at {0}")]
    Singular(usize),
    #[error("matrix is not upper triangular")]
    NotUpperTriangular,
    #[error("matrix is not strictly upper triangular")]
    NotStrictlyUpper,
    #[error("matrix is not in the coset QU_n of its subpermutation")]
    NotInCoset,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid subpermutation: {0}")]
    InvalidSubpermutation(String),
    #[error("invalid graph type: {0}")]
    InvalidGraphType(String),
    #[error("invalid cross arcs: {0}")]
    InvalidCross(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("move does not annihilate the target: {0}")]
    NotAnnihilable(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// A short stable tag naming the variant, for machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::NotPrime(_) => "not-prime",
            Error::DivisionByZero => "division-by-zero",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::FieldMismatch { .. } => "field-mismatch",
            Error::Singular(_) => "singular",
            Error::NotUpperTriangular => "not-upper-triangular",
            Error::NotStrictlyUpper => "not-strictly-upper",
            Error::NotInCoset => "not-in-coset",
            Error::InvalidPartition(_) => "invalid-partition",
            Error::InvalidSubpermutation(_) => "invalid-subpermutation",
            Error::InvalidGraphType(_) => "invalid-graph-type",
            Error::InvalidCross(_) => "invalid-cross",
            Error::OutOfRange(_) => "out-of-range",
            Error::SizeCap(_) => "size-cap",
            Error::NotAnnihilable(_) => "not-annihilable",
            Error::Internal(_) => "internal",
        }
    }
}
