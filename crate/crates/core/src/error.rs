//! Error type shared across the crate.

use thiserror::Error;

/// Failure modes of construction and composition.
///
/// Hypothesis failures of the obstruction theorems are not errors; the
/// checkers report those as [`crate::obstruction::Verdict::HypothesisNotMet`]
/// so that a caller can distinguish "the theorem says no" from "the theorem
/// does not apply". The one exception is [`Error::HypothesisViolated`], which
/// guards the parameter range of the Borsuk-Ulam feasibility test.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Gram matrix input is not symmetric.
    #[error("gram matrix is not symmetric at ({row}, {col})")]
    NonSymmetric { row: usize, col: usize },

    /// Matrix rows of unequal length.
    #[error("matrix rows have unequal lengths (first offender: row {row})")]
    RaggedRows { row: usize },

    /// A square matrix was required.
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Vector or matrix size does not match the ambient rank.
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The matrix fails `m^T G m = G` or is not in GL(n, Z).
    #[error("matrix does not preserve the form or has determinant other than +-1")]
    NotAnIsometry,

    /// Two isometries were combined over different lattices.
    #[error("isometries live on different lattices")]
    LatticeMismatch,

    /// `order()` ran past its cap.
    #[error("no power up to {cap} is the identity (order exceeds cap {cap})")]
    OrderExceedsCap { cap: usize },

    /// A sphere class must have self-intersection +2 or -2.
    #[error("self-intersection {found} is neither 2 nor -2")]
    InvalidSelfIntersection { found: String },

    /// The vector's square disagrees with the declared sphere sign.
    #[error("declared square {declared} but the vector has square {found}")]
    WrongSquare { declared: i64, found: String },

    /// Character denominator vanishes, so the trace quotient is undefined.
    #[error("character denominator vanishes at the chosen group element")]
    SingularDenominator,

    /// The character quotient exists in Q(i) but not in Z[i].
    #[error("character quotient is not a Gaussian integer")]
    NonIntegralResult,

    /// Borsuk-Ulam parameters must satisfy m0 < m1.
    #[error("Borsuk-Ulam parameters require m0 < m1, got m0 = {m0}, m1 = {m1}")]
    HypothesisViolated { m0: u32, m1: u32 },

    /// Halving the signature requires it to be even.
    #[error("signature {sigma} is odd")]
    OddSignature { sigma: i64 },

    /// An involution (square equal to the identity) was required.
    #[error("matrix is not an involution")]
    NotInvolution,

    /// Spin model requires an even lattice.
    #[error("lattice is not even: diagonal entry {index} is odd")]
    NotEven { index: usize },

    /// A manifest must contribute at least one summand of positive rank.
    #[error("manifest assembles to the empty lattice")]
    EmptyManifest,

    /// Free-form parameter validation failure.
    #[error("bad parameters: {0}")]
    BadParameters(String),

    /// A sweep or grid range is empty or out of bounds.
    #[error("bad range: {0}")]
    RangeError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
