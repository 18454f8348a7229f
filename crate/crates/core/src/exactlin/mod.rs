//! Exact dense linear algebra over prime fields.

mod field;
mod matrix;
mod poly;

pub use field::PrimeField;
pub use matrix::Matrix;
pub use poly::Poly;
