//! Semifields of coordinates, Puiseux series with valuation, tropicalization of the move
//! formulas, zone maps, and the monoids U^+(F) and U^{+τ}(F).

pub mod expr;
pub mod puiseux;
pub mod semifields;
pub mod umonoid;
pub mod zone;

pub use expr::{tropicalize, SfExpression, SfNode, Symbol, TropExpression, TropNode};
pub use puiseux::{PuiseuxScalar, DEFAULT_HORIZON};
pub use semifields::{is_dyadic, is_dyadic_vec, rat_string, PositiveRational, SemifieldTag, TropicalQ, TropicalZ, TropicalZHalf, Trivial};
pub use umonoid::{usemifield_element, usemifield_multiply, UPoint};
pub use zone::{
    utau_supported, utau_tropical_membership, utau_tuple, valuations, zone_action, zone_map, zone_supported,
    zone_transition, TropicalPoint, ZoneMap,
};

use moves::{MoveError, SfError};
use pinned_groups::{PrecisionSensitive, ScalarError};
use thiserror::Error;
use weyl_core::WeylError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZoneError {
    #[error("not positive: {0}")]
    NotPositive(String),
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unsupported move: {0}")]
    UnsupportedMove(String),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("{0}")]
    Domain(String),
    #[error("rewriting budget exhausted: {0}")]
    Budget(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Semifield(#[from] SfError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

impl PrecisionSensitive for ZoneError {
    fn is_undecidable(&self) -> bool {
        match self {
            ZoneError::Scalar(e) => e.is_undecidable(),
            ZoneError::Semifield(e) => e.is_undecidable(),
            ZoneError::Move(e) => e.is_undecidable(),
            _ => false,
        }
    }
}
