//! Exact toolkit for finite-dimensional baric and Bernstein algebras.
//!
//! Everything is computed over the rationals with no rounding. Algebras are
//! commutative structure-constant tables ([`AlgebraTable`]); identities are
//! verified on generic elements whose coordinates are polynomials in fresh
//! indeterminates ([`symbolic`]), which decides them over any infinite field.

pub mod algebra;
pub mod analysis;
pub mod constructions;
pub mod error;
pub mod exec;
pub mod linalg;
pub mod mpoly;
pub mod ring;
pub mod scalar;
pub mod structure;
pub mod symbolic;
pub mod train;
pub mod trees;
pub mod upoly;

pub use algebra::{AlgebraTable, Elem, Element, Operator, SymbolicElement, TableBuilder};
pub use error::{Error, Result};
pub use mpoly::{MultiPoly, VarPool};
pub use ring::Coeff;
pub use scalar::Scalar;
pub use upoly::UnivariatePoly;
