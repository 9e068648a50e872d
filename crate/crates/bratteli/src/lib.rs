//! Exact models of approximately finite dimensional operator algebras.
//!
//! The crate has four layers:
//!
//! * [`algebra`] — finite dimensional C*-algebras presented by matrix unit
//!   systems, with exact rational block matrices and a floating point
//!   operator norm.
//! * [`diagram`] — Bratteli diagrams (truncated, or infinite via an
//!   eventually periodic tail), the Fermion property, simplicity, centre
//!   triviality, unique descending paths and the Type I taxonomy.
//! * [`maps`] — matrix-unit homomorphisms, compression-type linear maps,
//!   the refinement/standard/twist/ordered embedding families, isometry
//!   certificates and left inverses.
//! * [`interpolation`] — direct systems and the commuting-diagram engine:
//!   it synthesises isometric compression-type injections between systems
//!   together with left inverses, and emits certificates every part of
//!   which is re-checkable exactly on the matrix unit basis.
//!
//! Indices are 1-based throughout: matrix units, summands, diagram levels
//! and vertices are all numbered from 1, matching the usual operator
//! algebra notation (`e_{11}` is the top-left unit). Serialization of
//! these objects lives in the companion CLI crate.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod interpolation;
pub mod maps;
mod norm;
pub mod sample;
pub mod scalar;
pub mod system;

pub use algebra::{AlgebraElement, FiniteDimAlgebra, MaskKind, TriangularMask};

pub use error::Error;
pub use scalar::Scalar;
