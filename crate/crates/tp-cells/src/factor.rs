//! Factorization of totally positive unipotent matrices in type A by peeling generators
//! off the right.

use pinned_groups::{GroupElement, Matrix, Scalar};
use weyl_core::{Family, TwistedInvolution};

use crate::{CellContext, CellError};

fn check_type_a(ctx: &CellContext) -> Result<(), CellError> {
    let label = ctx.model.datum().label;
    let n = ctx.model.dim();
    if label.family != Family::A || label.doubled || n != ctx.model.rank() + 1 {
        return Err(CellError::Unsupported(format!("factorization in {}", ctx.model.name())));
    }
    for i in 1..n {
        let mut e = Matrix::zeros(n, n);
        e.set(i - 1, i, Scalar::one());
        if !ctx.model.raising_matrix(i)?.equals(&e)? {
            return Err(CellError::Unsupported(format!("nonstandard pinning of {}", ctx.model.name())));
        }
    }
    Ok(())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The largest a with g·x_j(−a) still totally nonnegative, read off as the smallest ratio
/// Δ_{R,C}(g)/Δ_{R,C′}(g) over column sets C ∋ j+1, C ∌ j with C′ = C − {j+1} + {j}.
/// `None` when no such minor ratio has a positive denominator.
fn peel_amount(g: &GroupElement, j: usize) -> Result<Option<Scalar>, CellError> {
    let n = g.rows();
    let (lo, hi) = (j - 1, j);
    let mut best: Option<Scalar> = None;
    for k in 1..=n {
        let rows = subsets(n, k);
        for c in subsets(n, k) {
            if !c.contains(&hi) || c.contains(&lo) {
                continue;
            }
            let mut cp: Vec<usize> = c.iter().map(|&x| if x == hi { lo } else { x }).collect();
            cp.sort_unstable();
            for r in &rows {
                let den = g.minor(r, &cp)?;
                if !den.is_positive()? {
                    continue;
                }
                let ratio = g.minor(r, &c)?.div(&den)?;
                best = Some(match best {
                    Some(b) if b.compare(&ratio)?.is_le() => b,
                    _ => ratio,
                });
            }
        }
    }
    Ok(best)
}

fn peel(ctx: &CellContext, g: &GroupElement, j: usize, a: &Scalar) -> Result<GroupElement, CellError> {
    Ok(g.mul(&ctx.model.gen_x(j, &a.neg())?))
}

/// Coordinates c with ψ_i(c) = g for the reduced word i.
pub fn factor_unipotent_a(ctx: &CellContext, g: &GroupElement, word: &[usize]) -> Result<Vec<Scalar>, CellError> {
    check_type_a(ctx)?;
    if !ctx.tw.group().is_reduced(word)? {
        return Err(CellError::NotReduced(word.to_vec()));
    }
    if !g.is_upper_unitriangular()? {
        return Err(CellError::NotInCell("not upper unitriangular".into()));
    }
    let mut rest = g.clone();
    let mut coords = vec![Scalar::zero(); word.len()];
    for (k, &j) in word.iter().enumerate().rev() {
        let a = peel_amount(&rest, j)?
            .ok_or_else(|| CellError::NotInCell(format!("no parameter for letter {j} at position {k}")))?;
        if !a.is_positive()? {
            return Err(CellError::NotInCell(format!("parameter {a} at position {k}")));
        }
        rest = peel(ctx, &rest, j, &a)?;
        coords[k] = a;
    }
    if !rest.is_identity()? {
        return Err(CellError::NotInCell("remainder is not the identity".into()));
    }
    Ok(coords)
}

/// A reduced word and coordinates of a totally nonnegative upper unitriangular matrix.
pub fn weyl_cell_a(ctx: &CellContext, g: &GroupElement) -> Result<(Vec<usize>, Vec<Scalar>), CellError> {
    check_type_a(ctx)?;
    if !g.is_upper_unitriangular()? {
        return Err(CellError::NotInCell("not upper unitriangular".into()));
    }
    let rank = ctx.model.rank();
    let max_len = ctx.tw.group().len_of(ctx.tw.group().longest_id());
    let mut rest = g.clone();
    let mut word = Vec::new();
    let mut coords = Vec::new();
    while !rest.is_identity()? {
        if word.len() == max_len {
            return Err(CellError::NotInCell("peeling does not terminate".into()));
        }
        let mut found = None;
        for j in 1..=rank {
            if let Some(a) = peel_amount(&rest, j)? {
                if a.is_positive()? {
                    found = Some((j, a));
                    break;
                }
            }
        }
        let (j, a) = found.ok_or_else(|| CellError::NotInCell("no letter can be peeled".into()))?;
        rest = peel(ctx, &rest, j, &a)?;
        word.push(j);
        coords.push(a);
    }
    word.reverse();
    coords.reverse();
    if !ctx.tw.group().is_reduced(&word)? {
        return Err(CellError::NotInCell(format!("peeled word {word:?} is not reduced")));
    }
    Ok((word, coords))
}

/// The twisted involution w with g ∈ U^{+τ}_{≥0,w}; lower unitriangular input is
/// classified in U^{−τ}_{≥0}.
pub fn classify_cell(ctx: &CellContext, g: &GroupElement) -> Result<TwistedInvolution, CellError> {
    check_type_a(ctx)?;
    if !ctx.model.is_tau_fixed(g)? {
        return Err(CellError::NotInCell("not τ-fixed".into()));
    }
    let group = ctx.tw.group();
    let e = if g.is_upper_unitriangular()? {
        let (word, _) = weyl_cell_a(ctx, g)?;
        group.id_of_word(&word)?
    } else if g.transpose().is_upper_unitriangular()? {
        let (word, _) = weyl_cell_a(ctx, &g.transpose())?;
        group.inverse_id(group.id_of_word(&word)?)
    } else {
        return Err(CellError::NotInCell("not unitriangular".into()));
    };
    if !ctx.tw.is_twisted_id(e) {
        return Err(CellError::NotInCell("cell index is not a twisted involution".into()));
    }
    Ok(ctx.tw.info(e)?)
}
