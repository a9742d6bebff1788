//! Exact computations with based quasi-hereditary graded superalgebras.

pub mod algebra;
pub mod basicize;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod format;
pub mod heredity;
pub mod linalg;
pub mod modules;
pub mod truncation;

pub use algebra::{AlgebraElement, BasisElement, SuperAlgebra};
pub use error::Error;
pub use heredity::{BasedAlgebra, HeredityData, Poset};
pub use linalg::{Degree, ExactMatrix, Field, GradedDim, Parity, Scalar};
