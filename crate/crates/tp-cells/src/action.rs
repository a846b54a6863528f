//! The generator actions g ↦ x_{i*}(a)·g·x_i(a) and g ↦ y_{i*}(a)·g·y_i(a) on cell
//! coordinates, and the inverse of the append step.

use std::collections::{HashSet, VecDeque};

use moves::{apply_site, transition_between};
use pinned_groups::Scalar;
use weyl_core::{ElemId, MoveSite, MoveTag, SignedLetter};

use crate::param::check_positive;
use crate::point::{CellIndex, CellKind, CellPoint, CellWord};
use crate::{CellContext, CellError};

fn star_word(ctx: &CellContext, w: &[usize]) -> Vec<usize> {
    w.iter().map(|&i| ctx.model.datum().star_of(i)).collect()
}

/// First involution word of `e` ending in `i`.
fn word_ending_in(ctx: &CellContext, e: ElemId, i: usize) -> Result<Option<Vec<usize>>, CellError> {
    Ok(ctx.tw.involution_words_id(e)?.into_iter().find(|w| w.last() == Some(&i)))
}

/// Coordinates of the same unipotent point along another involution word.
fn retarget(
    ctx: &CellContext,
    kind: CellKind,
    word: &[usize],
    coords: &[Scalar],
    target: &[usize],
) -> Result<Vec<Scalar>, CellError> {
    if word == target {
        return Ok(coords.to_vec());
    }
    let map = match kind {
        CellKind::UMinus => transition_between(&ctx.tw, &star_word(ctx, word), &star_word(ctx, target))?,
        _ => transition_between(&ctx.tw, word, target)?,
    };
    Ok(map.compose(ctx.model.datum(), coords)?)
}

fn element_word(ctx: &CellContext, e: ElemId) -> Vec<usize> {
    ctx.tw.group().element(e).word
}

/// Applies x_{i*}(a)·g·x_i(a) (sign +1) or y_{i*}(a)·g·y_i(a) (sign −1) to the point.
pub fn conjugation_step(
    ctx: &CellContext,
    point: &CellPoint,
    letter: SignedLetter,
    a: &Scalar,
) -> Result<CellPoint, CellError> {
    ctx.model.datum().check_letter(letter.index)?;
    check_positive(std::slice::from_ref(a))?;
    check_positive(&point.coords)?;
    let i = letter.index;
    let istar = ctx.model.datum().star_of(i);
    let si = ctx.tw.group().id_of_word(&[istar])?;
    match (&point.kind, &point.word) {
        (CellKind::UPlus | CellKind::UMinus, CellWord::Plain(word)) => {
            let want = if point.kind == CellKind::UPlus { 1 } else { -1 };
            if letter.sign != want {
                return Err(CellError::WrongCase(format!("sign {} on a {:?} point", letter.sign, point.kind)));
            }
            let c = ctx.tw.involution_target(word)?;
            let new = ctx.tw.cell_index_action_id(si, c)?;
            let mut out = point.clone();
            out.index = CellIndex::Single(element_word(ctx, new));
            if new != c {
                let mut w = word.clone();
                w.push(i);
                out.word = CellWord::Plain(w);
                out.coords.push(a.clone());
                return Ok(out);
            }
            let target = word_ending_in(ctx, c, i)?
                .ok_or_else(|| CellError::Unsupported(format!("no involution word of the cell ends in {i}")))?;
            let mut coords = retarget(ctx, point.kind, word, &point.coords, &target)?;
            let last = coords.len() - 1;
            coords[last] = coords[last].add(a);
            out.word = CellWord::Plain(target);
            out.coords = coords;
            Ok(out)
        }
        (CellKind::G, word) => {
            let jj = word.signed();
            let (lo, hi) = point.cell_ids(ctx)?;
            let lo = lo.ok_or_else(|| CellError::InvalidJointWord("plain word on a G point".into()))?;
            let (new_lo, new_hi) = match letter.sign {
                -1 => (ctx.tw.cell_index_action_id(si, lo)?, hi),
                1 => (lo, ctx.tw.cell_index_action_id(si, hi)?),
                s => return Err(CellError::InvalidJointWord(format!("sign {s}"))),
            };
            let mut out = point.clone();
            out.index = CellIndex::Pair(element_word(ctx, new_lo), element_word(ctx, new_hi));
            if (new_lo, new_hi) != (lo, hi) {
                let mut w = jj;
                w.push(letter);
                out.word = CellWord::from_joint(&w);
                out.coords.push(a.clone());
                return Ok(out);
            }
            let torus = point
                .torus
                .clone()
                .unwrap_or_else(|| vec![Scalar::one(); ctx.model.torus_rank()]);
            let (w, mut coords, torus) = joint_ending_in(ctx, &jj, &point.coords, &torus, letter)?;
            let last = coords.len() - 1;
            coords[last] = coords[last].add(a);
            out.word = CellWord::from_joint(&w);
            out.coords = coords;
            out.torus = Some(torus);
            Ok(out)
        }
        _ => Err(CellError::InvalidJointWord("joint word on a unipotent cell".into())),
    }
}

type JointState = (Vec<SignedLetter>, Vec<Scalar>, Vec<Scalar>);

/// Exchanges the adjacent letters (i, ±), (i, ∓) at `p` using
/// x_i(a)y_i(b) = y_i(b/s)α_i^∨(s)x_i(a/s) with s = 1 + ab, pushing the coroot factor into
/// the torus part.
fn exchange(ctx: &CellContext, state: &JointState, p: usize) -> Result<JointState, CellError> {
    let (w, c, t) = state;
    let i = w[p].index;
    let s = Scalar::one().add(&c[p].mul(&c[p + 1]));
    let sigma = if w[p].sign > 0 { s.clone() } else { s.recip()? };
    let mut v = w.clone();
    v.swap(p, p + 1);
    let mut d = c.clone();
    d[p] = c[p + 1].div(&s)?;
    d[p + 1] = c[p].div(&s)?;
    let datum = ctx.model.datum();
    for k in 0..=p {
        let e = i64::from(datum.c(i, v[k].index));
        let f = sigma.pow_i(if v[k].sign > 0 { -e } else { e })?;
        d[k] = d[k].mul(&f);
    }
    let m = ctx.model.coroot_in_torus_basis(i)?;
    let hc: Vec<Scalar> = m.iter().map(|&e| sigma.pow_i(e)).collect::<Result<_, _>>()?;
    let thc = ctx.model.tau_torus_coords(&hc)?;
    let tn: Vec<Scalar> = t.iter().zip(&hc).zip(&thc).map(|((a, b), c)| a.mul(b).mul(c)).collect();
    Ok((v, d, tn))
}

/// Involution moves on the leading run of one sign. Writing t = τ(t½)t½, the run B
/// satisfies τ(B)·t·B = τ(t½)·τ(B′)B′·t½ with B′ = t½·B·t½⁻¹, so the moves of κ (of κ⁻ on
/// starred words for lowering runs) apply to the rescaled coordinates of B′.
fn leading_run_moves(ctx: &CellContext, state: &JointState) -> Result<Vec<JointState>, CellError> {
    let (w, c, t) = state;
    let Some(first) = w.first() else { return Ok(Vec::new()) };
    let sign = first.sign;
    let len = w.iter().take_while(|l| l.sign == sign).count();
    let datum = ctx.model.datum();
    let run: Vec<usize> = w[..len]
        .iter()
        .map(|l| if sign > 0 { l.index } else { datum.star_of(l.index) })
        .collect();
    let half = ctx.model.torus_half(&ctx.model.torus_elt(t)?)?;
    let scale = |j: usize, v: &Scalar, inverse: bool| -> Result<Scalar, CellError> {
        let f = ctx.model.root_value(j, &half)?;
        Ok(if (sign > 0) != inverse { v.mul(&f) } else { v.div(&f)? })
    };
    let scaled: Vec<Scalar> = (0..len)
        .map(|k| scale(w[k].index, &c[k], false))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for site in weyl_core::braid::applicable_moves(&ctx.tw, &run) {
        if site.tag.is_standard() && site.tag != MoveTag::StarSwap {
            continue;
        }
        let Some(next) = site.apply(&run) else { continue };
        let moved = apply_site(datum, &site, &scaled)?;
        let mut v = w.clone();
        let mut d = c.clone();
        for k in 0..len {
            let index = if sign > 0 { next[k] } else { datum.star_of(next[k]) };
            v[k] = SignedLetter { index, sign };
            d[k] = scale(index, &moved[k], true)?;
        }
        out.push((v, d, t.clone()));
    }
    Ok(out)
}

/// Rewrites a joint word to one ending in `letter`, using exchanges of letters of
/// opposite signs, standard braid moves inside runs of one sign and involution moves on
/// the leading run.
fn joint_ending_in(
    ctx: &CellContext,
    jj: &[SignedLetter],
    coords: &[Scalar],
    torus: &[Scalar],
    letter: SignedLetter,
) -> Result<JointState, CellError> {
    let datum = ctx.model.datum();
    let mut seen = HashSet::from([jj.to_vec()]);
    let mut queue = VecDeque::from([(jj.to_vec(), coords.to_vec(), torus.to_vec())]);
    while let Some(state) = queue.pop_front() {
        let (w, c, t) = &state;
        if w.last() == Some(&letter) {
            return Ok(state);
        }
        let mut next = leading_run_moves(ctx, &state)?;
        for p in 0..w.len().saturating_sub(1) {
            let (x, y) = (w[p], w[p + 1]);
            if x.sign != y.sign {
                if x.index == y.index {
                    next.push(exchange(ctx, &state, p)?);
                } else {
                    let mut v = w.clone();
                    v.swap(p, p + 1);
                    let mut d = c.clone();
                    d.swap(p, p + 1);
                    next.push((v, d, t.clone()));
                }
                continue;
            }
            if x.index == y.index {
                continue;
            }
            let m = datum.m(x.index, y.index);
            let Some(tag) = MoveTag::std_for_m(m) else { continue };
            if p + m > w.len() {
                continue;
            }
            let alternates = (0..m).all(|k| {
                let l = w[p + k];
                l.sign == x.sign && l.index == if k % 2 == 0 { x.index } else { y.index }
            });
            if !alternates {
                continue;
            }
            let site = MoveSite {
                tag,
                position: 0,
                letters: vec![x.index, y.index],
                forward: true,
            };
            let out = apply_site(datum, &site, &c[p..p + m])?;
            let mut v = w.clone();
            let mut d = c.clone();
            for k in 0..m {
                v[p + k] = if k % 2 == 0 { y } else { x };
                d[p + k] = out[k].clone();
            }
            next.push((v, d, t.clone()));
        }
        for st in next {
            if seen.insert(st.0.clone()) {
                queue.push_back(st);
            }
        }
    }
    Err(CellError::Unsupported(format!(
        "no rewrite of the joint word ends in ({}, {})",
        letter.index, letter.sign
    )))
}

/// Moves a U± point to an involution word ending in `i` and splits off the last
/// coordinate: the point u and the value a with x_{i*}(a)·u·x_i(a) equal to the input.
pub fn peel_last(ctx: &CellContext, point: &CellPoint, i: usize) -> Result<(CellPoint, Scalar), CellError> {
    let CellWord::Plain(word) = &point.word else {
        return Err(CellError::Unsupported("peeling a G point".into()));
    };
    if point.kind == CellKind::G {
        return Err(CellError::Unsupported("peeling a G point".into()));
    }
    let c = ctx.tw.involution_target(word)?;
    let target = word_ending_in(ctx, c, i)?
        .ok_or_else(|| CellError::WrongCase(format!("no involution word of the cell ends in {i}")))?;
    let mut coords = retarget(ctx, point.kind, word, &point.coords, &target)?;
    let a = coords.pop().expect("target word ends in i");
    let rest = target[..target.len() - 1].to_vec();
    let e = ctx.tw.involution_target(&rest)?;
    Ok((
        CellPoint {
            kind: point.kind,
            index: CellIndex::Single(element_word(ctx, e)),
            word: CellWord::Plain(rest),
            coords,
            torus: None,
        },
        a,
    ))
}

/// Inverse of the append step at i for a U+ point of w with s_{i*}w = ws_i and
/// |w| = |s_{i*}w| + 1.
pub fn alpha_inverse(ctx: &CellContext, point: &CellPoint, i: usize) -> Result<(CellPoint, Scalar), CellError> {
    if point.kind != CellKind::UPlus {
        return Err(CellError::WrongCase("alpha_inverse takes a U+ point".into()));
    }
    let CellWord::Plain(word) = &point.word else {
        return Err(CellError::WrongCase("alpha_inverse takes a U+ point".into()));
    };
    ctx.model.datum().check_letter(i)?;
    let g = ctx.tw.group();
    let w = ctx.tw.involution_target(word)?;
    let istar = ctx.model.datum().star_of(i);
    let left = g.mul_gen_left(w, istar - 1);
    if left != g.mul_gen_right(w, i - 1) || g.len_of(w) != g.len_of(left) + 1 {
        return Err(CellError::WrongCase(format!("s_{istar}·w = w·s_{i} with a length drop fails")));
    }
    peel_last(ctx, point, i)
}
