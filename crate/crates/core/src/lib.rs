//! Exact Hochschild and cyclic homology of truncated quiver algebras.
//!
//! The crate covers truncated path algebras `kΓ/𝔪ᴺ`, the Taft algebras `Λₙ`
//! with their Hopf structure and modules, the Auslander algebra of `Λₙ`, and
//! Grothendieck-ring products with Chern characters. Closed formulas are
//! paired with brute-force complexes so that each one can be checked.

pub mod auslander;
pub mod cyclic;
pub mod error;
pub mod hochschild;
pub mod ktheory;
pub mod linalg;
pub mod quiver;
pub mod scalar;
pub mod taft;

pub use auslander::{build_auslander, AuslanderAlgebra, ExtTable, ResolutionReport};
pub use cyclic::HCQuery;
pub use error::{Error, Result};
pub use hochschild::HHQuery;
pub use ktheory::{ChernClass, K0Element, K0Ring};
pub use linalg::{ChainPiece, Echelon, GradedChainComplex, HomologyTable, Provenance, SparseMatrix};
pub use quiver::{AlgebraBasis, AlgebraPresentation, CycleOrbit, Path, PresentationKind, Quiver, Relation};
pub use scalar::{Field, FieldDescriptor, Scalar};
pub use taft::{HopfMutation, HopfReport, IndecLabel, TaftAlgebra, TaftModule};
