//! Exact computer-algebra workbench for Reflection Equation algebras.
//!
//! The crate constructs skew-invertible Hecke symmetries over Q(q), builds
//! the (modified) Reflection Equation algebras they generate, computes
//! central elements through the characteristic map (power sums, elementary
//! symmetric polynomials, weight systems), verifies quantum Cayley-Hamilton
//! identities, and realizes the quantum Harish-Chandra morphism sending
//! central elements to symmetric polynomials in quantum eigenvalues, with
//! character evaluation on the defining module.
//!
//! Everything is exact: coefficients live in the field of rational functions
//! in q with arbitrary-precision integer coefficients, and every identity is
//! verified by canonical-form equality, never numerically.
//!
//! ```
//! use rea_core::{Reducer, RelationSet, Variant};
//! use rea_core::charmap::power_sum;
//! use rea_core::symmetry::Symmetry;
//!
//! // the Drinfeld-Jimbo symmetry with N = 2, validated on construction
//! let sym = Symmetry::drinfeld_jimbo(2)?;
//! assert_eq!(sym.even_birank(), Some(2));
//!
//! // p_2 = Tr_R L^2 is central in the RE algebra
//! let reducer = Reducer::new(&RelationSet::new(&sym, Variant::Re), 3);
//! let p2 = power_sum(&sym, Variant::Re, 2);
//! assert!(reducer.is_central(&p2.expr)?);
//! # Ok::<(), rea_core::Error>(())
//! ```

pub mod charmap;
pub mod error;
mod expr;
pub mod hecke;
mod linalg;
pub mod mpoly;
pub mod ncalg;
pub mod repv;
pub mod scalar;
pub mod spectral;
pub mod symmetry;
pub mod tensor;
pub mod verify;


pub use charmap::{l_chain, CentralElement, CharPoly};
pub use error::{Error, Result};
pub use hecke::{HeckeAlgebra, HeckeElement, Perm};
pub use ncalg::{default_degree_bound, NCMatrix, NCPoly, Reducer, RelationSet, Variant};
pub use scalar::ScalarQ;
pub use spectral::{EvBasisElement, Partition, SymPoly};

pub use symmetry::{BirankReport, Symmetry, SymmetryKind};
pub use tensor::TensorOp;
