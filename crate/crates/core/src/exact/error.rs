use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("operands live in different scalar domains")]
    DomainMismatch,
    #[error("expected {expected} substitution images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions {0}x{1} and {2}x{3} do not compose")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("both polynomials are zero; the proportionality constant is undetermined")]
    BothZero,
    #[error("the zero form has no discriminant")]
    ZeroForm,
    #[error("binary forms of degree {0} are not supported here (expected 2 or 3)")]
    UnsupportedDegree(usize),
    #[error("{0} is not a prime modulus this crate supports")]
    NotPrime(u64),
    #[error("polynomial of degree {0} is not a valid extension modulus")]
    BadModulus(usize),
}
