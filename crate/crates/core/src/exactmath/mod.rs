//! Exact arithmetic: ground fields, dense matrices and linear systems.

mod field;
mod linsolve;
mod matrix;

pub use field::{Field, Scalar, MAX_MODULUS};
pub use linsolve::{LinearSystem, Solution, Span};
pub use matrix::Matrix;

pub(crate) use field::pow_mod;
