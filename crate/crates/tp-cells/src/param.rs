use pinned_groups::{GroupElement, Matrix, Scalar};
use weyl_core::SignedLetter;

use crate::point::{CellIndex, CellKind, CellPoint, CellWord};
use crate::{CellContext, CellError};

pub(crate) fn check_positive(coords: &[Scalar]) -> Result<(), CellError> {
    for (k, c) in coords.iter().enumerate() {
        if !c.is_positive()? {
            return Err(CellError::NotPositive(k));
        }
    }
    Ok(())
}

fn check_len(expected: usize, got: usize) -> Result<(), CellError> {
    if expected != got {
        return Err(CellError::Arity { expected, got });
    }
    Ok(())
}

pub(crate) fn gen(ctx: &CellContext, l: SignedLetter, a: &Scalar) -> Result<GroupElement, CellError> {
    Ok(if l.sign > 0 {
        ctx.model.gen_x(l.index, a)?
    } else {
        ctx.model.gen_y(l.index, a)?
    })
}

pub(crate) fn starred(ctx: &CellContext, l: SignedLetter) -> SignedLetter {
    SignedLetter {
        index: ctx.model.datum().star_of(l.index),
        sign: l.sign,
    }
}

fn product(ctx: &CellContext, word: &[SignedLetter], coords: &[Scalar]) -> Result<GroupElement, CellError> {
    let mut g = Matrix::identity(ctx.model.dim());
    for (&l, a) in word.iter().zip(coords) {
        g = g.mul(&gen(ctx, l, a)?);
    }
    Ok(g)
}

fn raising(word: &[usize]) -> Vec<SignedLetter> {
    word.iter().map(|&index| SignedLetter { index, sign: 1 }).collect()
}

fn lowering(word: &[usize]) -> Vec<SignedLetter> {
    word.iter().map(|&index| SignedLetter { index, sign: -1 }).collect()
}

fn check_reduced(ctx: &CellContext, word: &[usize]) -> Result<(), CellError> {
    if !ctx.tw.group().is_reduced(word)? {
        return Err(CellError::NotReduced(word.to_vec()));
    }
    Ok(())
}

/// x_{i_1}(a_1) … x_{i_k}(a_k) for a reduced word.
pub fn psi_plus(ctx: &CellContext, word: &[usize], coords: &[Scalar]) -> Result<GroupElement, CellError> {
    check_len(word.len(), coords.len())?;
    check_reduced(ctx, word)?;
    check_positive(coords)?;
    product(ctx, &raising(word), coords)
}

/// y_{i_1}(a_1) … y_{i_k}(a_k) for a reduced word.
pub fn psi_minus(ctx: &CellContext, word: &[usize], coords: &[Scalar]) -> Result<GroupElement, CellError> {
    check_len(word.len(), coords.len())?;
    check_reduced(ctx, word)?;
    check_positive(coords)?;
    product(ctx, &lowering(word), coords)
}

/// The palindromic product x^ε_{i_k*}(a_k) … x^ε_{i_1*}(a_1) · mid · x^ε_{i_1}(a_1) … x^ε_{i_k}(a_k).
pub(crate) fn palindrome(
    ctx: &CellContext,
    word: &[SignedLetter],
    coords: &[Scalar],
    mid: Option<&GroupElement>,
) -> Result<GroupElement, CellError> {
    let left: Vec<SignedLetter> = word.iter().rev().map(|&l| starred(ctx, l)).collect();
    let rc: Vec<Scalar> = coords.iter().rev().cloned().collect();
    let mut g = product(ctx, &left, &rc)?;
    if let Some(m) = mid {
        g = g.mul(m);
    }
    Ok(g.mul(&product(ctx, word, coords)?))
}

fn check_involution_word(ctx: &CellContext, word: &[usize]) -> Result<(), CellError> {
    let e = ctx.tw.involution_target(word)?;
    if !ctx.tw.is_involution_word(e, word)? {
        return Err(CellError::InvalidInvolutionWord(word.to_vec()));
    }
    Ok(())
}

/// κ_i(a) = x_{i_k*}(a_k) … x_{i_1*}(a_1) x_{i_1}(a_1) … x_{i_k}(a_k).
pub fn kappa(ctx: &CellContext, word: &[usize], coords: &[Scalar]) -> Result<GroupElement, CellError> {
    check_len(word.len(), coords.len())?;
    check_involution_word(ctx, word)?;
    check_positive(coords)?;
    palindrome(ctx, &raising(word), coords, None)
}

/// κ⁻_i(a) = y_{i_k*}(a_k) … y_{i_1*}(a_1) y_{i_1}(a_1) … y_{i_k}(a_k).
pub fn kappa_minus(ctx: &CellContext, word: &[usize], coords: &[Scalar]) -> Result<GroupElement, CellError> {
    check_len(word.len(), coords.len())?;
    check_involution_word(ctx, word)?;
    check_positive(coords)?;
    palindrome(ctx, &lowering(word), coords, None)
}

/// Splits a joint word into its lowering and raising subwords and checks that each is an
/// involution word.
pub(crate) fn joint_parts(ctx: &CellContext, jj: &[SignedLetter]) -> Result<(usize, usize), CellError> {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for l in jj {
        match l.sign {
            -1 => lo.push(l.index),
            1 => hi.push(l.index),
            s => return Err(CellError::InvalidJointWord(format!("sign {s}"))),
        }
    }
    check_involution_word(ctx, &lo).map_err(|_| CellError::InvalidJointWord(format!("lowering part {lo:?}")))?;
    check_involution_word(ctx, &hi).map_err(|_| CellError::InvalidJointWord(format!("raising part {hi:?}")))?;
    Ok((ctx.tw.involution_target(&lo)?, ctx.tw.involution_target(&hi)?))
}

pub(crate) fn check_torus(ctx: &CellContext, torus: &[Scalar]) -> Result<GroupElement, CellError> {
    check_len(ctx.model.torus_rank(), torus.len())?;
    for c in torus {
        if !c.is_positive()? {
            return Err(CellError::Pinned(pinned_groups::PinnedError::NotPositive));
        }
    }
    if !ctx.model.is_tau_fixed_torus_coords(torus)? {
        return Err(CellError::NotTauFixed);
    }
    Ok(ctx.model.torus_elt(torus)?)
}

/// κ_jj(a, t) = x^{ε_n}_{i_n*}(a_n) … x^{ε_1}_{i_1*}(a_1) t x^{ε_1}_{i_1}(a_1) … x^{ε_n}_{i_n}(a_n),
/// with x^{−1} = y; `torus` holds the coordinates of a τ-fixed positive torus element.
pub fn kappa_joint(
    ctx: &CellContext,
    jj: &[SignedLetter],
    coords: &[Scalar],
    torus: &[Scalar],
) -> Result<GroupElement, CellError> {
    check_len(jj.len(), coords.len())?;
    joint_parts(ctx, jj)?;
    check_positive(coords)?;
    let t = check_torus(ctx, torus)?;
    palindrome(ctx, jj, coords, Some(&t))
}

/// An element h with h·τ(h) = κ_jj(a, t): the left half of the palindrome times √t.
pub fn kappa_joint_half(
    ctx: &CellContext,
    jj: &[SignedLetter],
    coords: &[Scalar],
    torus: &[Scalar],
) -> Result<GroupElement, CellError> {
    check_len(jj.len(), coords.len())?;
    check_positive(coords)?;
    let t = check_torus(ctx, torus)?;
    let left: Vec<SignedLetter> = jj.iter().rev().map(|&l| starred(ctx, l)).collect();
    let rc: Vec<Scalar> = coords.iter().rev().cloned().collect();
    Ok(product(ctx, &left, &rc)?.mul(&ctx.model.torus_half(&t)?))
}

fn element_word(ctx: &CellContext, e: weyl_core::ElemId) -> Vec<usize> {
    ctx.tw.group().element(e).word
}

impl CellPoint {
    /// The point κ_i(a) of U^{+τ}_{≥0,w}.
    pub fn u_plus(ctx: &CellContext, word: &[usize], coords: &[Scalar]) -> Result<CellPoint, CellError> {
        kappa(ctx, word, coords)?;
        let e = ctx.tw.involution_target(word)?;
        Ok(CellPoint {
            kind: CellKind::UPlus,
            index: CellIndex::Single(element_word(ctx, e)),
            word: CellWord::Plain(word.to_vec()),
            coords: coords.to_vec(),
            torus: None,
        })
    }

    /// The point κ⁻_i(a) of U^{−τ}_{≥0,w}.
    pub fn u_minus(ctx: &CellContext, word: &[usize], coords: &[Scalar]) -> Result<CellPoint, CellError> {
        kappa_minus(ctx, word, coords)?;
        let e = ctx.tw.involution_target(word)?;
        Ok(CellPoint {
            kind: CellKind::UMinus,
            index: CellIndex::Single(element_word(ctx, e)),
            word: CellWord::Plain(word.to_vec()),
            coords: coords.to_vec(),
            torus: None,
        })
    }

    /// The point κ_jj(a, t) of G^τ_{≥0,w,w′}.
    pub fn joint(
        ctx: &CellContext,
        jj: &[SignedLetter],
        coords: &[Scalar],
        torus: &[Scalar],
    ) -> Result<CellPoint, CellError> {
        kappa_joint(ctx, jj, coords, torus)?;
        let (lo, hi) = joint_parts(ctx, jj)?;
        Ok(CellPoint {
            kind: CellKind::G,
            index: CellIndex::Pair(element_word(ctx, lo), element_word(ctx, hi)),
            word: CellWord::from_joint(jj),
            coords: coords.to_vec(),
            torus: Some(torus.to_vec()),
        })
    }

    /// Checks the point's invariants and returns its matrix.
    pub fn evaluate(&self, ctx: &CellContext) -> Result<GroupElement, CellError> {
        match (self.kind, &self.word) {
            (CellKind::UPlus, CellWord::Plain(w)) => kappa(ctx, w, &self.coords),
            (CellKind::UMinus, CellWord::Plain(w)) => kappa_minus(ctx, w, &self.coords),
            (CellKind::G, word) => {
                let torus = self
                    .torus
                    .clone()
                    .unwrap_or_else(|| vec![Scalar::one(); ctx.model.torus_rank()]);
                kappa_joint(ctx, &word.signed(), &self.coords, &torus)
            }
            _ => Err(CellError::InvalidJointWord("joint word on a unipotent cell".into())),
        }
    }

    /// The twisted involution (or pair) indexing the cell.
    pub fn cell_ids(&self, ctx: &CellContext) -> Result<(Option<weyl_core::ElemId>, weyl_core::ElemId), CellError> {
        match &self.word {
            CellWord::Plain(w) => Ok((None, ctx.tw.involution_target(w)?)),
            CellWord::Joint(_) => {
                let (lo, hi) = joint_parts(ctx, &self.word.signed())?;
                Ok((Some(lo), hi))
            }
        }
    }
}
