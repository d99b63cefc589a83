//! Exact scalars: rationals, cyclotomic numbers, parameter polynomials and their fraction field.

pub mod cyclo;
pub mod ppoly;
pub mod prat;
pub mod spec;
pub mod text;

/// Exact rational numbers.
pub type Q = num_rational::BigRational;

pub use cyclo::{CycNum, CycOp};
pub use ppoly::{gcd, PPoly, Sym};
pub use prat::{ParamRat, RatOp};
pub use spec::SpecMap;
pub use text::parse_scalar;

/// Applies a specialization to a scalar.
pub fn specialize_scalar(s: &ParamRat, m: &SpecMap) -> crate::error::Result<ParamRat> {
    m.apply(s)
}
