use std::fmt::Debug;

use pinned_groups::{PrecisionSensitive, Scalar, ScalarError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SfError {
    #[error("semifield does not support {0}")]
    Unsupported(String),
    #[error(transparent)]
    Arithmetic(#[from] ScalarError),
    #[error("{0}")]
    Domain(String),
}

impl PrecisionSensitive for SfError {
    fn is_undecidable(&self) -> bool {
        matches!(self, SfError::Arithmetic(e) if e.is_undecidable())
    }
}

/// A semifield: commutative addition and multiplication, multiplicative inverses, no
/// subtraction. Square roots are optional.
pub trait Semifield: Clone + Debug + PartialEq {
    fn sf_one() -> Self;
    fn sf_add(&self, o: &Self) -> Self;
    fn sf_mul(&self, o: &Self) -> Self;
    fn sf_div(&self, o: &Self) -> Result<Self, SfError>;

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        Err(SfError::Unsupported("square roots".into()))
    }

    /// The image of the positive integer `n`.
    fn sf_const(n: u32) -> Self {
        let one = Self::sf_one();
        let mut acc = one.clone();
        for _ in 1..n.max(1) {
            acc = acc.sf_add(&one);
        }
        acc
    }

    /// Access to the underlying real scalar, for moves that need subtraction.
    fn sf_as_scalar(&self) -> Option<&Scalar> {
        None
    }

    fn sf_from_scalar(_s: Scalar) -> Option<Self> {
        None
    }

    fn sf_pow(&self, k: u32) -> Self {
        let mut acc = Self::sf_one();
        for _ in 0..k {
            acc = acc.sf_mul(self);
        }
        acc
    }
}

impl Semifield for Scalar {
    fn sf_one() -> Self {
        Scalar::one()
    }

    fn sf_add(&self, o: &Self) -> Self {
        self.add(o)
    }

    fn sf_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        Ok(self.div(o)?)
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        Ok(self.sqrt()?)
    }

    fn sf_const(n: u32) -> Self {
        Scalar::from_i64(i64::from(n))
    }

    fn sf_as_scalar(&self) -> Option<&Scalar> {
        Some(self)
    }

    fn sf_from_scalar(s: Scalar) -> Option<Self> {
        Some(s)
    }
}
