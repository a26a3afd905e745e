//! Error type shared across the library.

use thiserror::Error;

/// Everything that can go wrong in exact computations over ℚ and ℚ(√d).
///
/// `NeedsFieldExtension` and `Unsplittable` are mathematical obstructions of
/// the working field, not bugs: they report that a computation would succeed
/// over ℂ but cannot be expressed in the current field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("computation requires adjoining sqrt({d}) to the working field")]
    NeedsFieldExtension { d: i64 },

    #[error("already working over Q(sqrt({have})); would need sqrt of {need} on top (field towers are not supported)")]
    FieldTower { have: i64, need: String },

    #[error("cannot split over the working field: {detail}")]
    Unsplittable { detail: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("covector is not a character: it does not vanish on [g_ev, g_ev]")]
    NotInL,

    #[error("odd subspace is not invariant under the even part")]
    NotInvariant,

    #[error("odd subspace is not isotropic for the form of the given character")]
    NotIsotropic,

    #[error("the given subspace is not a subalgebra")]
    NotASubalgebra,

    #[error("quotient is not one-dimensional (dim {dim})")]
    QuotientNotOneDimensional { dim: usize },

    #[error("unknown pattern makes the Jacobi system nonlinear: {detail}")]
    NonlinearTemplate { detail: String },

    #[error("precondition violated: {detail}")]
    Precondition { detail: String },
}
