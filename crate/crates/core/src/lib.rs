//! Exact GF(p) constructions of dual Weyl modules and twisted Specht modules
//! from column tabloids and Garnir relations.

pub mod combinatorics;
pub mod error;
pub mod garnir;
pub mod linalg;
pub mod module_builder;
pub mod report;
pub mod tabloids;
pub mod theorems;

pub use combinatorics::{Partition, Tableau, TableauClass, Weight};
pub use error::{Error, Result};
pub use linalg::{FieldPrime, FpVector, MatrixGFp, Subspace};
pub use tabloids::{TabloidBasis, TabloidKind, TabloidVector};
