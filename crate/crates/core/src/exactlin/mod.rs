//! Exact linear algebra over the rationals and prime fields.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{axpy, is_zero_vec, scale_vec, zero_vec, Matrix, Rref, Span, Vector};
pub use poly::{eval_poly, roots_in_field};
pub use scalar::{is_prime, Field, Rat, Scalar};
