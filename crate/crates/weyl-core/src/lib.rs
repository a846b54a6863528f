//! Finite Weyl group combinatorics for symmetric-space total positivity: Cartan data with a
//! diagram involution, Demazure products, twisted involutions, involution words, joint
//! words and braid graphs.

pub mod braid;
pub mod datum;
pub mod group;
pub mod twisted;

pub use braid::{braid_graph, BraidEdge, BraidGraph, MoveSite, MoveTag};
pub use datum::{CartanDatum, Family, StarChoice, TypeLabel};
pub use group::{ElemId, WeylElement, WeylGroup};
pub use twisted::{InvolutionWord, JointWord, SignedLetter, TwistedInvolution, TwistedWeyl};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("unsupported star for {0}")]
    UnsupportedStar(String),
    #[error("star must be an involution")]
    StarNotInvolution,
    #[error("star does not preserve the Cartan matrix")]
    StarBreaksCartan,
    #[error("malformed star: {0}")]
    BadStar(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("letter {0} out of range for rank {1}")]
    LetterOutOfRange(usize, usize),
    #[error("enumeration cap {0} exceeded")]
    EnumerationCap(usize),
    #[error("element is not a twisted involution")]
    NotTwisted,
    #[error("word is not valid here: {0}")]
    InvalidWord(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
