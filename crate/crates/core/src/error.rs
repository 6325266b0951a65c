use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("root-of-unity index {index} out of range 1..={order}")]
    RootIndexOutOfRange { index: usize, order: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    #[error("operation requires the cyclotomic variant")]
    AffineVariant,

    #[error("affine basis enumeration needs a degree bound")]
    MissingDegreeBound,

    #[error("permutation {0} leaves the Young subgroup")]
    OutsideYoungSubgroup(String),

    #[error("term outside block: {0}")]
    OutsideBlock(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("not a scalar: {0}")]
    NotScalar(String),

    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("dimension {dim} exceeds configured bound {bound}")]
    DimensionBound { dim: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
