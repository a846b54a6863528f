//! Dimension counts of the cells G^τ_{≥0,w,w′} and the rank of the differential of κ_jj.

use pinned_groups::{GroupElement, Matrix, Scalar};
use weyl_core::{ElemId, SignedLetter};

use crate::param::{check_torus, gen, joint_parts, kappa_joint, starred};
use crate::{CellContext, CellError};

/// ‖w‖ + ‖w′‖ + dim T^τ_{>0}.
pub fn cell_dimension(ctx: &CellContext, w: ElemId, wp: ElemId) -> Result<usize, CellError> {
    Ok(ctx.tw.norm_id(w)? + ctx.tw.norm_id(wp)? + ctx.model.tau_fixed_torus_dim())
}

/// Number of parameters of κ_jj: one per letter plus the τ-fixed torus.
pub fn parameter_count(ctx: &CellContext, jj: &[SignedLetter]) -> Result<usize, CellError> {
    joint_parts(ctx, jj)?;
    Ok(jj.len() + ctx.model.tau_fixed_torus_dim())
}

fn tangent(ctx: &CellContext, l: SignedLetter) -> Result<Matrix, CellError> {
    Ok(if l.sign > 0 {
        ctx.model.raising_matrix(l.index)?
    } else {
        ctx.model.lowering_matrix(l.index)?
    })
}

fn product(n: usize, ms: &[GroupElement]) -> Matrix {
    let mut g = Matrix::identity(n);
    for m in ms {
        g = g.mul(m);
    }
    g
}

fn rank(rows: Vec<Vec<Scalar>>) -> Result<usize, CellError> {
    let mut rows = rows;
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let mut pivot = None;
        for (k, row) in rows.iter().enumerate().skip(r) {
            if !row[c].equals(&Scalar::zero())? {
                pivot = Some(k);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip()?;
        for k in r + 1..rows.len() {
            if rows[k][c].equals(&Scalar::zero())? {
                continue;
            }
            let f = rows[k][c].mul(&inv);
            for j in c..cols {
                let v = rows[k][j].sub(&f.mul(&rows[r][j]));
                rows[k][j] = v;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Ok(r)
}

/// Rank of the differential of (a, t) ↦ κ_jj(a, t) at a point, computed exactly.
pub fn jacobian_rank(
    ctx: &CellContext,
    jj: &[SignedLetter],
    coords: &[Scalar],
    torus: &[Scalar],
) -> Result<usize, CellError> {
    kappa_joint(ctx, jj, coords, torus)?;
    let t = check_torus(ctx, torus)?;
    let n = ctx.model.dim();
    let k = jj.len();
    // factors: left half (reversed, starred), torus, right half
    let mut factors: Vec<GroupElement> = Vec::with_capacity(2 * k + 1);
    for p in (0..k).rev() {
        factors.push(gen(ctx, starred(ctx, jj[p]), &coords[p])?);
    }
    factors.push(t.clone());
    for p in 0..k {
        factors.push(gen(ctx, jj[p], &coords[p])?);
    }
    let split = |pos: usize, mid: &Matrix| product(n, &factors[..pos]).mul(mid).mul(&product(n, &factors[pos..]));
    let mut rows = Vec::new();
    for p in 0..k {
        let left_pos = k - 1 - p;
        let right_pos = k + 1 + p;
        let d = split(left_pos, &tangent(ctx, starred(ctx, jj[p]))?).add(&split(right_pos, &tangent(ctx, jj[p])?));
        rows.push(d.entries().to_vec());
    }
    for v in ctx.model.tau_fixed_log_directions() {
        let dv = Matrix::diagonal(v.iter().map(|&x| Scalar::from_i64(x)).collect());
        rows.push(split(k + 1, &dv).entries().to_vec());
    }
    rank(rows)
}
