//! Exact univariate arithmetic: integer polynomials, canonical rational
//! functions, power-series expansion, and exact rational evaluation.

mod poly;
mod ratfun;

pub use poly::Polynomial;
pub use ratfun::{cauchy_product, Rational, RationalFunction};

pub(crate) use ratfun::{poly_from_strings, poly_to_strings};
