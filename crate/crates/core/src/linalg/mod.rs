//! Exact linear algebra over `Q` and `GF(p)`, and the graded-dimension ring.

pub mod field;
pub mod gdim;
pub mod matrix;

pub use field::{Field, Scalar};
pub use gdim::{Degree, GradedDim, Parity};
pub use matrix::{commutant_dimension, rank_of, ExactMatrix, Rref, SpanCoordinates, Vector};
