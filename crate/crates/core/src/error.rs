use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error(
        "block ({row}, {col}) is {got_rows}x{got_cols}, layout expects {want_rows}x{want_cols}"
    )]
    BlockMismatch {
        row: usize,
        col: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("matrix is singular")]
    Singular,

    #[error("polynomial must be monic: {0}")]
    NotMonic(String),

    #[error("polynomial has degree 0, so k[t]/(p) is the zero algebra")]
    ConstantPolynomial,

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("factors {0} and {1} are not coprime")]
    NotCoprime(usize, usize),

    #[error("product of factors is {got}, expected {want}")]
    WrongProduct { got: String, want: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    Antisymmetry(usize, usize),

    #[error("Jacobi identity fails for basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),

    #[error("representation is not a homomorphism")]
    NotHomomorphism,

    #[error("Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("element is central")]
    CentralElement,

    #[error("operator family is zero")]
    ZeroFamily,

    #[error("operator at index {0} is zero")]
    ZeroOperator(usize),

    #[error("invalid operator family: {0}")]
    InvalidFamily(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}
