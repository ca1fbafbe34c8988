use thiserror::Error;

/// Errors reported by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix dimensions must be at least 1x1, got {rows}x{cols}")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("matrix has {rows}x{cols} = {expected} cells but {actual} entries were given")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        actual: usize,
    },

    #[error("denominator must be strictly positive")]
    NonPositiveDenominator,

    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,

    #[error("a polynomial of degree at least 1 is required")]
    ConstantPolynomial,

    #[error("polynomial pair does not have the interleaved shape: {0}")]
    ShapeViolation(String),

    #[error("polynomial must be monic")]
    NonMonic,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
