//! Exact computations with group determinants.

pub mod algebra;
pub mod arith;
pub mod det;
pub mod error;
pub mod factor;
pub mod group;
pub mod index2;
pub mod regrep;
pub mod report;
pub mod sample;
pub mod suite;

pub use error::{Error, Result};
