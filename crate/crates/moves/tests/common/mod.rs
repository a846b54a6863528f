#![allow(dead_code)]

use pinned_groups::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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
