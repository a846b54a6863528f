use serde::{Deserialize, Serialize};

use pinned_groups::Scalar;
use weyl_core::SignedLetter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellKind {
    #[serde(rename = "U+")]
    UPlus,
    #[serde(rename = "U-")]
    UMinus,
    #[serde(rename = "G")]
    G,
}

/// Reduced word of a twisted involution, or of each of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellIndex {
    Single(Vec<usize>),
    Pair(Vec<usize>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellWord {
    Plain(Vec<usize>),
    Joint(Vec<(usize, i8)>),
}

impl CellWord {
    pub fn len(&self) -> usize {
        match self {
            CellWord::Plain(w) => w.len(),
            CellWord::Joint(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn from_joint(letters: &[SignedLetter]) -> CellWord {
        CellWord::Joint(letters.iter().map(|l| (l.index, l.sign)).collect())
    }

    /// Letters with signs; plain words count as raising.
    pub fn signed(&self) -> Vec<SignedLetter> {
        match self {
            CellWord::Plain(w) => w.iter().map(|&index| SignedLetter { index, sign: 1 }).collect(),
            CellWord::Joint(w) => w.iter().map(|&(index, sign)| SignedLetter { index, sign }).collect(),
        }
    }
}

/// A point of a τ-fixed cell given by coordinates along a parametrizing word.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellPoint {
    pub kind: CellKind,
    pub index: CellIndex,
    pub word: CellWord,
    pub coords: Vec<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<Vec<Scalar>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorusPositivePoint {
    pub coordinates: Vec<Scalar>,
    pub tau_fixed: bool,
}
