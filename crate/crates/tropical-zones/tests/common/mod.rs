#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use pinned_groups::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_zones::PuiseuxScalar;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rv(xs: &[(i64, i64)]) -> Vec<BigRational> {
    xs.iter().map(|&(n, d)| r(n, d)).collect()
}

pub fn iv(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&n| r(n, 1)).collect()
}

/// A random positive series: leading exponent in ½ℤ ∩ [−2, 3], a few later terms with
/// exponents in ½ℤ, rational coefficients (leading one positive, later ones of any sign).
pub fn series(g: &mut ChaCha8Rng) -> PuiseuxScalar {
    let v = g.gen_range(-4..=6);
    let mut terms = vec![(r(v, 2), Scalar::from_ratio(g.gen_range(1..=9), g.gen_range(1..=5)))];
    let extra = g.gen_range(0..=3);
    for _ in 0..extra {
        let e = v + g.gen_range(1..=6);
        let mut c = g.gen_range(-6..=9);
        if c == 0 {
            c = 1;
        }
        terms.push((r(e, 2), Scalar::from_ratio(c, g.gen_range(1..=5))));
    }
    let order = if g.gen_bool(0.5) { None } else { Some(r(v + 12, 2)) };
    PuiseuxScalar::new(terms, order).unwrap()
}

pub fn series_vec(g: &mut ChaCha8Rng, n: usize) -> Vec<PuiseuxScalar> {
    (0..n).map(|_| series(g)).collect()
}
