//! Exact arithmetic for intersection forms of closed spin 4-manifolds:
//! integral lattices and their inertia, isometries induced by twists
//! along (+-2)-sphere classes and by involutions of connected sums, the
//! representation ring of the cyclic group of order 4 with its
//! Borsuk-Ulam constraint system, and the 10/8-type realizability
//! obstructions these feed.
//!
//! Everything is computed over the integers or exact rationals; no
//! floating point appears anywhere, so every verdict is a theorem about
//! the stated form rather than an approximation.
//!
//! The library is generic over the scalar type through [`Scalar`]
//! (any signed big-enough integer type from the `num` family works);
//! the aliases at the crate root fix arbitrary-precision integers,
//! which the command-line tool and the tests use throughout.

pub mod error;
mod isometry;
mod lattice;
pub mod manifold;
mod matrix;
pub mod obstruction;
pub mod rep_ring;
mod scalar;

pub use error::{Error, Result};
pub use isometry::{InvariantSignatureData, SphereClass, DEFAULT_ORDER_CAP};
pub use lattice::SignatureData;
pub use obstruction::{InequalityTrace, InvolutionType, ObstructionVerdict, Verdict};
pub use rep_ring::{
    borsuk_ulam_feasible, feasibility_equals_inequality, lambda_minus_one, tom_dieck_trace,
    trace, BUParameters, BUVerdict, GroupElement, InfeasibilityWitness,
};
pub use scalar::Scalar;

/// The scalar the concrete aliases use: arbitrary-precision integers.
pub type Int = num_bigint::BigInt;

/// Exact rationals over [`Int`], used internally for inertia counts.
pub type Rational = num_rational::Ratio<Int>;

/// Dense integer matrix over [`Int`].
pub type Matrix = matrix::Matrix<Int>;

/// Integral lattice (symmetric Gram matrix) over [`Int`].
pub type Lattice = lattice::Lattice<Int>;

/// Isometry of a [`Lattice`].
pub type Isometry = isometry::Isometry<Int>;

/// Element of the representation ring of the cyclic group of order 4.
pub type RGElement = rep_ring::RGElement<Int>;

/// Gaussian integer over [`Int`].
pub type GaussianInt = rep_ring::GaussianInt<Int>;

/// Spin manifold stand-in: an even lattice with a label.
pub type SpinManifoldData = obstruction::SpinManifoldData<Int>;

/// Generic matrix type for callers choosing their own scalar.
pub type GenericMatrix<T> = matrix::Matrix<T>;

/// Generic lattice type for callers choosing their own scalar.
pub type GenericLattice<T> = lattice::Lattice<T>;

/// Generic isometry type for callers choosing their own scalar.
pub type GenericIsometry<T> = isometry::Isometry<T>;
