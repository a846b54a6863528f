//! Transition maps between parametrizations: standard rank-two braid moves over any
//! semifield, the non-standard involution moves with square roots, composition along
//! braid graph paths and matrix-identity verification.

pub mod conservation;
pub mod degree;
pub mod formulas;
pub mod g2;
pub mod oracle;
pub mod semifield;
pub mod transition;

pub use conservation::{conservation_laws, failed_laws, Law};
pub use degree::{triangular_degree_check, DegreeReport};
pub use oracle::{check_move_identity, kappa_product, oracle_model, psi_product, Certificate, IdentityCheck};
pub use semifield::{Semifield, SfError};
pub use transition::{
    apply_site, compose_transition, evaluate_closed_form, evaluate_move, ns_windows, site_kind,
    transition_between, Direction, MoveKind, TransitionMap,
};

use pinned_groups::{PinnedError, PrecisionSensitive, ScalarError};
use thiserror::Error;
use weyl_core::WeylError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MoveError {
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("coordinate {0} is not positive")]
    NotPositive(usize),
    #[error(transparent)]
    Semifield(#[from] SfError),
    #[error("internal inconsistency in {tag}: {detail}")]
    RootSelection { tag: String, detail: String },
    #[error("path mismatch: {0}")]
    PathMismatch(String),
    #[error("matrix identity failed: {0}")]
    IdentityFailed(String),
    #[error("triangular form violated: {0}")]
    DegreeViolation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Pinned(#[from] PinnedError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl From<ScalarError> for MoveError {
    fn from(e: ScalarError) -> Self {
        MoveError::Semifield(SfError::Arithmetic(e))
    }
}

impl PrecisionSensitive for MoveError {
    fn is_undecidable(&self) -> bool {
        match self {
            MoveError::Semifield(e) => e.is_undecidable(),
            MoveError::Pinned(e) => e.is_undecidable(),
            _ => false,
        }
    }
}
