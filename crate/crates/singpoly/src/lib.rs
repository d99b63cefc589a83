//! Exact computation of nonsymmetric Jack and Macdonald polynomials, Hecke-algebra
//! isotypes, singular specializations, and special-point factorizations.

pub mod build;
pub mod coeffs;
pub mod combin;
pub mod error;
pub mod mpoly;
pub mod ops;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
