//! Matrix-identity verification of move coordinate maps in concrete pinned models.

use serde::{Deserialize, Serialize};

use pinned_groups::{escalate, Matrix, PinnedModel, Scalar};
use weyl_core::braid::ns_patterns;
use weyl_core::{MoveTag, StarChoice};

use crate::transition::{evaluate_move, ns_windows, Direction, MoveKind};
use crate::MoveError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    Exact,
    Interval { max_relative_width: f64 },
}

impl Certificate {
    pub fn of(values: &[Scalar]) -> Certificate {
        if values.iter().all(Scalar::is_exact) {
            Certificate::Exact
        } else {
            Certificate::Interval {
                max_relative_width: values.iter().map(Scalar::relative_width).fold(0.0, f64::max),
            }
        }
    }

    pub fn merge(&self, o: &Certificate) -> Certificate {
        match (self, o) {
            (Certificate::Exact, Certificate::Exact) => Certificate::Exact,
            (Certificate::Exact, x) | (x, Certificate::Exact) => x.clone(),
            (
                Certificate::Interval { max_relative_width: a },
                Certificate::Interval { max_relative_width: b },
            ) => Certificate::Interval {
                max_relative_width: a.max(*b),
            },
        }
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::Exact => f.write_str("exact"),
            Certificate::Interval { max_relative_width } => write!(f, "interval({max_relative_width:.3e})"),
        }
    }
}

/// x_{i_1}(a_1) … x_{i_k}(a_k).
pub fn psi_product(model: &PinnedModel, word: &[usize], coords: &[Scalar]) -> Result<Matrix, MoveError> {
    let mut g = Matrix::identity(model.dim());
    for (&i, a) in word.iter().zip(coords) {
        g = g.mul(&model.gen_x(i, a)?);
    }
    Ok(g)
}

/// x_{i_k*}(a_k) … x_{i_1*}(a_1) x_{i_1}(a_1) … x_{i_k}(a_k).
pub fn kappa_product(model: &PinnedModel, word: &[usize], coords: &[Scalar]) -> Result<Matrix, MoveError> {
    let d = model.datum();
    let starred: Vec<usize> = word.iter().rev().map(|&i| d.star_of(i)).collect();
    let rc: Vec<Scalar> = coords.iter().rev().cloned().collect();
    Ok(psi_product(model, &starred, &rc)?.mul(&psi_product(model, word, coords)?))
}

/// Pinned model used to check a move, and the global letter of each local label.
pub fn oracle_model(tag: MoveTag) -> Result<(PinnedModel, Vec<usize>), MoveError> {
    Ok(match tag {
        MoveTag::StdA1A1 => (PinnedModel::special_linear(3, StarChoice::Identity)?, vec![1, 3]),
        MoveTag::StdA2 | MoveTag::Ns43i => (PinnedModel::special_linear(2, StarChoice::Identity)?, vec![1, 2]),
        MoveTag::Ns44 => (PinnedModel::special_linear(2, StarChoice::Flip)?, vec![1, 2]),
        MoveTag::StdB2 | MoveTag::Ns45 => (PinnedModel::symplectic(2)?, vec![1, 2]),
        MoveTag::StdG2 => (PinnedModel::g2_in_so7()?, vec![1, 2]),
        MoveTag::Ns46 => (PinnedModel::special_linear(3, StarChoice::Flip)?, vec![1, 2, 3]),
        MoveTag::Ns47 => (PinnedModel::symplectic(3)?, vec![3, 2, 1]),
        MoveTag::Ns48 => (PinnedModel::odd_orthogonal(3)?, vec![3, 2, 1]),
        MoveTag::Ns49 => (PinnedModel::even_orthogonal(4, StarChoice::Identity)?, vec![2, 1, 3, 4]),
        MoveTag::StarSwap => (PinnedModel::special_linear(3, StarChoice::Flip)?, vec![1, 3]),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub kind: MoveKind,
    pub model: String,
    pub input: Vec<Scalar>,
    pub output: Vec<Scalar>,
    pub certificate: Certificate,
}

/// Evaluates the move and checks its defining matrix identity: the κ-images of the two
/// involution words for non-standard moves, the plain products for standard ones.
pub fn check_move_identity(kind: MoveKind, input: &[Scalar]) -> Result<IdentityCheck, MoveError> {
    escalate(|| check_once(kind, input))
}

fn check_once(kind: MoveKind, input: &[Scalar]) -> Result<IdentityCheck, MoveError> {
    let (model, labels) = oracle_model(kind.tag)?;
    let output = evaluate_move(kind, input)?;
    let forward = kind.direction == Direction::Forward;
    let (lhs, rhs) = if kind.tag.is_standard() {
        let m = kind.arity();
        let (i, j) = if kind.tag == MoveTag::StarSwap {
            (labels[0], labels[1])
        } else if forward {
            (labels[0], labels[1])
        } else {
            (labels[1], labels[0])
        };
        if kind.tag == MoveTag::StarSwap {
            let l = kappa_product(&model, &[i], input)?;
            let r = kappa_product(&model, &[j], &output)?;
            (l, r)
        } else {
            let src: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
            let dst: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
            (psi_product(&model, &src, input)?, psi_product(&model, &dst, &output)?)
        }
    } else {
        let pat = ns_patterns()
            .into_iter()
            .find(|p| p.tag == kind.tag)
            .ok_or_else(|| MoveError::Internal("missing pattern".into()))?;
        let (fin, fout) = ns_windows(kind.tag).ok_or_else(|| MoveError::Internal("missing window".into()))?;
        let (from, to, src, dst) = if forward {
            (&pat.source, &pat.target, &fin, &fout)
        } else {
            (&pat.target, &pat.source, &fout, &fin)
        };
        let n = src.len();
        let mut before = vec![Scalar::zero(); n];
        let mut after = vec![Scalar::zero(); n];
        for k in 0..n {
            before[src[k]] = input[k].clone();
            after[dst[k]] = output[k].clone();
        }
        let wf: Vec<usize> = from.iter().map(|&l| labels[l]).collect();
        let wt: Vec<usize> = to.iter().map(|&l| labels[l]).collect();
        (kappa_product(&model, &wf, &before)?, kappa_product(&model, &wt, &after)?)
    };
    if !lhs.equals(&rhs)? {
        return Err(MoveError::IdentityFailed(format!("{kind} in {}", model.name())));
    }
    let cert = match Certificate::of(&output) {
        Certificate::Exact if !(lhs.entries().iter().all(Scalar::is_exact) && rhs.entries().iter().all(Scalar::is_exact)) => {
            Certificate::Interval { max_relative_width: 0.0 }
        }
        c => c,
    };
    Ok(IdentityCheck {
        kind,
        model: model.name().to_string(),
        input: input.to_vec(),
        output,
        certificate: cert,
    })
}
