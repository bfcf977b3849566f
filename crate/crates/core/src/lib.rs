//! Exact Hochschild theory of the quantum zigzag algebras of type A~1.
//!
//! The algebra `A_q = kQ/I` is the 8-dimensional quotient of the path
//! algebra of the two-vertex, four-arrow quiver by the q-deformed zigzag
//! relations. This crate computes, in exact arithmetic over a choice of
//! coefficient field (rational, rational-function, or cyclotomic):
//!
//! - the minimal projective bimodule resolution and its homology/cohomology
//!   complexes, with exact ranks, dimensions and explicit cohomology bases;
//! - cyclic homology dimensions;
//! - the cup product (by a closed formula and independently through a
//!   diagonal chain map) and the ring structure of `HH*(A_q)`;
//! - comparison morphisms with the reduced bar resolution via a weak
//!   self-homotopy, the Batalin-Vilkovisky operator, and Gerstenhaber
//!   brackets;
//! - an independent reduced-bar-complex oracle used to cross-validate
//!   dimensions, cup products and brackets at low degree.
//!
//! Everything is generic over the scalar type through the [`Scalar`] trait;
//! the three concrete coefficient fields are re-exported at the crate root.

pub mod algebra;
pub mod bv;
pub mod complexes;
pub mod cyclotomic;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod products;
pub mod ratfun;
pub mod report;
pub mod resolution;
pub mod scalar;
pub mod suites;

pub use cyclotomic::Cyclo;
pub use field::{Field, FieldError, QClass, QSpec};
pub use num::BigRational;
pub use ratfun::RatFun;
pub use scalar::Scalar;

/// Scalar type used when q is a fixed rational number.
pub type Rat = BigRational;
/// Scalar type used when q is generic (the rational function field).
pub type Fun = RatFun;
/// Scalar type used when q is a root of unity.
pub type Cyc = Cyclo;
