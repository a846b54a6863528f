//! Exact matrix models of pinned groups with the maps σ, ω, τ and the twisted action.

pub mod matrix;
pub mod model;
pub mod scalar;

pub use matrix::Matrix;
pub use model::{gauss_decompose, model_catalog, GroupElement, OmegaRecipe, PinnedModel};
pub use scalar::{
    escalate, precision, with_precision, Interval, Level, PrecisionSensitive, Quadratic, Scalar,
    ScalarError, MAX_PRECISION, MIN_PRECISION,
};

use thiserror::Error;
use weyl_core::WeylError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PinnedError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("no ω recipe for {0} with a nontrivial star")]
    NoOmega(String),
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),
    #[error("not in open Bruhat cell")]
    NotInBruhatCell,
    #[error("element is not τ-fixed")]
    NotTauFixed,
    #[error("element is not positive")]
    NotPositive,
    #[error("element is not in the torus")]
    NotTorus,
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("model invariant violated: {0}")]
    InvariantViolated(String),
}

impl PrecisionSensitive for PinnedError {
    fn is_undecidable(&self) -> bool {
        matches!(self, PinnedError::Scalar(e) if e.is_undecidable())
    }
}
