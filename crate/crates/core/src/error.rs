use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("generator degrees differ: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("constant polynomial where a nonconstant one is required")]
    ConstantPolynomial,
    #[error("empty generator list")]
    EmptyInput,
    #[error("Chow classes live in different ambient dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("constant coefficient {0} is not a unit in Z")]
    NotAUnit(String),
    #[error("not divisible by (t+1): input is not a valid CSM class")]
    InexactDivision,
    #[error("minor size {k} exceeds a {rows}x{cols} Jacobian")]
    MinorTooLarge { k: usize, rows: usize, cols: usize },
    #[error(
        "no generic choice found in {0} draws; the field may be too small or the input degenerate"
    )]
    RetriesExhausted(usize),
    #[error("scheme is not a complete intersection (codim {codim}, {generators} generators)")]
    NotCompleteIntersection { codim: usize, generators: usize },
    #[error("no ordering of the generators leaves a smooth complete intersection; use the hybrid or inclusion-exclusion algorithm")]
    NoSmoothOrdering,
    #[error("scheme is singular")]
    NotSmooth,
    #[error("{0}")]
    Precondition(String),
}
