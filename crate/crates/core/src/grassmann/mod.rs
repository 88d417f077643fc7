//! Planes in P^4: chart, Plücker map, restricted conics and the quintic.

pub mod chart;
pub mod claims;
pub mod conic;
pub mod degree;
pub mod quintic;
pub mod sampling;

use thiserror::Error;

use crate::exact::ExactError;

pub use chart::{symbolic_chart, PlaneChart, PlueckerVec, CHART_VARS};
pub use claims::verify_grassmann_claims;
pub use conic::{conic_classify, conic_restriction, ConicClass, QuadricForm};
pub use degree::{deg_fq, grassmann_degree};
pub use quintic::{fq_quintic, verify_quintic_identity, QuinticIdentity};
pub use sampling::{exhaustive_statistics, sample_conic_statistics, SampleStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("quintic data checksum mismatch: expected {expected}, computed {computed}")]
    Checksum { expected: String, computed: String },
    #[error("quintic data: {0}")]
    Parse(String),
    #[error("quadric matrix must be 5x5 symmetric (conics 3x3 symmetric)")]
    NonSymmetric,
    #[error("restricted conic is identically zero: the plane lies in the quadric")]
    PlaneInQuadric,
    #[error("the quadric has coefficients 1/2, which do not exist in this characteristic")]
    Characteristic,
    #[error("Plücker coordinate {0} disagrees with its minor")]
    MinorTable(usize),
    #[error("Gr({k},{n}) is outside 1 <= k < n <= 8")]
    OutOfRange { k: usize, n: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("sampling needs p >= 3, got {0}")]
    PrimeTooSmall(u64),
    #[error("p = {0} is too large to enumerate every chart")]
    PrimeTooLarge(u64),
}
