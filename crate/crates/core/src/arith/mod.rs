//! Exact coefficient arithmetic: rationals, cyclotomic fields and sparse
//! multivariate polynomials over them.

pub mod cyclotomic;
pub mod poly;
mod upoly;

pub use cyclotomic::{cyclotomic_polynomial, root_of_unity, totient, Cyclotomic};
pub use poly::{Monomial, MultiPoly, Var};

/// Arbitrary-precision rationals, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
