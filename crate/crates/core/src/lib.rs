//! Exact computations for finite-dimensional quiver algebras with a
//! stratification: standard and costandard modules, tilting modules, the
//! Ringel dual, the two-step dual and finitistic dimension.

#![forbid(unsafe_code)]

pub mod error;
pub mod exactlin;
pub mod homology;
pub mod presentation;
pub mod repcat;
pub mod strat;
pub mod tilt;
pub mod twostep;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod testing;
