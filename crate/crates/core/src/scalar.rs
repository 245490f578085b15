//! Scalar abstraction for exact integer arithmetic.
//!
//! Every lattice and isometry in this crate is generic over a scalar `T`
//! implementing [`Scalar`]. The trait bundles the `num` ecosystem bounds
//! needed for exact linear algebra over Z and Q: Euclidean-style division
//! with remainder, sign queries, and conversion from machine integers.
//! Signature computation works in `Ratio<T>`, so `T` must be a valid
//! rational component type (an integer with GCD), which `num_integer::Integer`
//! provides.
//!
//! The crate root exposes aliases that fix `T = num_bigint::BigInt`; those
//! cover every entry point in this library without overflow concerns. Using
//! `i64` instead trades safety for speed and is sound for small ranks.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Exact integer scalar: the coefficient ring for Gram matrices and isometries.
pub trait Scalar:
    Integer + Signed + FromPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer scalar must embed i64")
    }
}

impl<T> Scalar for T where
    T: Integer + Signed + FromPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
}
