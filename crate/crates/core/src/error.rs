use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("matrix size {0} exceeds the desk-scale bound {1} for exhaustive minor enumeration")]
    SizeBound(usize, usize),
    #[error("malformed index set: {0}")]
    IndexSet(String),
    #[error("generator index {0} out of range for {1} generators")]
    GeneratorIndex(usize, usize),
    #[error("word is not reduced")]
    NotReduced,
    #[error("words represent different group elements")]
    DifferentElements,
    #[error("element length {0} exceeds the enumeration bound {1}")]
    LengthBound(usize, usize),
    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("singular denominator: {0}")]
    Singular(String),
    #[error("vanishing leading principal minor at position {0}")]
    LeadingMinorZero(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("flags are not transverse")]
    NotTransverse,
    #[error("subspace is not isotropic for the form")]
    NotIsotropic,
    #[error("parameter slot {0} has the wrong kind for generator {1}")]
    SlotKind(usize, usize),
    #[error("invalid scalar literal `{0}`")]
    ScalarLiteral(String),
    #[error("invalid input in field `{field}`: {msg}")]
    Input { field: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
