//! Cells of the totally nonnegative parts of U^{+τ}, U^{−τ} and G^τ: their parametrizations
//! by involution words and joint words, factorization and cell membership in type A, and
//! the coordinate-level generator actions on cells.

pub mod action;
pub mod dim;
pub mod factor;
pub mod param;
pub mod point;

pub use action::{alpha_inverse, conjugation_step, peel_last};
pub use dim::{cell_dimension, jacobian_rank, parameter_count};
pub use factor::{classify_cell, factor_unipotent_a, weyl_cell_a};
pub use param::{kappa, kappa_joint, kappa_joint_half, kappa_minus, psi_minus, psi_plus};
pub use point::{CellIndex, CellKind, CellPoint, CellWord, TorusPositivePoint};

use moves::MoveError;
use pinned_groups::{PinnedError, PinnedModel, PrecisionSensitive, ScalarError};
use thiserror::Error;
use weyl_core::{TwistedWeyl, WeylError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CellError {
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("coordinate {0} is not positive")]
    NotPositive(usize),
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("{0:?} is not an involution word of the cell")]
    InvalidInvolutionWord(Vec<usize>),
    #[error("invalid joint word: {0}")]
    InvalidJointWord(String),
    #[error("torus point is not τ-fixed")]
    NotTauFixed,
    #[error("not in the cell: {0}")]
    NotInCell(String),
    #[error("case hypotheses fail: {0}")]
    WrongCase(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Pinned(#[from] PinnedError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

impl From<ScalarError> for CellError {
    fn from(e: ScalarError) -> Self {
        CellError::Pinned(PinnedError::Scalar(e))
    }
}

impl PrecisionSensitive for CellError {
    fn is_undecidable(&self) -> bool {
        match self {
            CellError::Pinned(e) => e.is_undecidable(),
            CellError::Move(e) => e.is_undecidable(),
            _ => false,
        }
    }
}

/// A pinned model together with its Weyl group data.
#[derive(Debug, Clone)]
pub struct CellContext {
    pub model: PinnedModel,
    pub tw: TwistedWeyl,
}

impl CellContext {
    pub fn new(model: PinnedModel) -> Result<Self, CellError> {
        let tw = TwistedWeyl::new(model.datum())?;
        Ok(CellContext { model, tw })
    }
}
