#![allow(dead_code)]

use pinned_groups::{PinnedModel, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tp_cells::CellContext;
use weyl_core::StarChoice;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn positive(r: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(r.gen_range(1..=12), r.gen_range(1..=7))
}

pub fn sample(r: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| positive(r)).collect()
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

pub fn sl(rank: usize, flip: bool) -> CellContext {
    let star = if flip { StarChoice::Flip } else { StarChoice::Identity };
    CellContext::new(PinnedModel::special_linear(rank, star).unwrap()).unwrap()
}

pub fn gl(n: usize) -> CellContext {
    CellContext::new(PinnedModel::general_linear(n).unwrap()).unwrap()
}

/// A random positive τ-fixed torus point s·τ(s).
pub fn tau_torus(ctx: &CellContext, r: &mut ChaCha8Rng) -> Vec<Scalar> {
    let s = sample(r, ctx.model.torus_rank());
    let ts = ctx.model.tau_torus_coords(&s).unwrap();
    s.iter().zip(&ts).map(|(a, b)| a * b).collect()
}

pub fn pick<'a, T>(r: &mut ChaCha8Rng, v: &'a [T]) -> &'a T {
    &v[r.gen_range(0..v.len())]
}
