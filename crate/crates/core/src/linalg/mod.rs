//! Exact sparse linear algebra and graded chain complexes.

mod complex;
mod echelon;
mod matrix;

pub use complex::{ChainPiece, GradedChainComplex, HomologyTable, Provenance};
pub use echelon::Echelon;
pub use matrix::SparseMatrix;
