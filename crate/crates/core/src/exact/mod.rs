//! Exact scalars, sparse polynomials, small matrices and binary forms.

pub mod binary;
pub mod error;
pub mod field;
pub mod fp;
pub mod gf;
pub mod mat;
pub mod mpoly;
pub mod rat;
pub mod upoly;

pub use binary::BinaryForm;
pub use error::ExactError;
pub use field::{FiniteField, Field, Ring};
pub use fp::{Fp, PrimeField};
pub use gf::{ExtField, Gf};
pub use mat::Mat;
pub use mpoly::{MPoly, MPolyCtx, Mono};
pub use rat::Rat;
pub use upoly::UPoly;
