//! Exact computations with finite-dimensional nonassociative algebras given
//! by structure constants: Albert isotopes, nil-ranks, simplicity tests, and
//! verification pipelines that rebuild the isotopy classification of simple
//! 3-dimensional unital commutative algebras step by step.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod format;
pub mod isotopy;
pub mod nilrank;

pub use error::{Error, Result};
