//! partcat: an exact calculus for categories of partitions.
//!
//! The crate models colored partitions of upper and lower points — plain,
//! two-colored, and with extra singletons — together with:
//!
//! - the category operations (tensor, composition with loop count,
//!   involution, rotations) on canonical forms ([`partition`]),
//! - the exact matrix realization `T_p` over Q(sqrt N) and Mor-space
//!   dimensions ([`tmap`], [`matrix`], [`scalar`]),
//! - formal linear combinations with scaled composition, the projection
//!   calculus and the dotted-partition basis ([`linear`]),
//! - the functor `F` to two-colored partitions, degree of reflection, and
//!   the functor `U` with its explicit orthogonal matrix ([`functors`]),
//! - bounded category closures with membership and separating-invariant
//!   certificates ([`closure`], [`invariants`]),
//! - emission of the associated generator-and-relations presentations
//!   ([`relations`]).
//!
//! All arithmetic in the computational path is exact; the coefficient
//! field is pluggable through [`scalar::Field`], with [`Scalar`] (elements
//! `a + b*sqrt(N)`) as the concrete choice used throughout.

pub mod error;
pub mod scalar;
pub mod partition;
pub mod signature;
pub mod text;
pub mod generators;
pub mod matrix;
pub mod tmap;
pub mod linear;
pub mod random;

pub use error::{PartError, Result};
pub use linear::{DotLetter, DottedWord, LinearCombination};
pub use partition::{Color, Partition, Regime, RotationDirection, Side};
pub use scalar::{Field, Scalar};
pub use signature::Signature;

/// Concrete exact matrix over Q(sqrt N).
pub type Matrix = matrix::ExactMatrix<Scalar>;
/// Concrete linear combination over Q(sqrt N).
pub type Lin = linear::LinearCombination<Scalar>;
