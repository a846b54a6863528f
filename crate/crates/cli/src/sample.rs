//! Seeded sampling. Each named stream has its own generator, so adding or reordering
//! checks never changes the samples drawn by another one.

use num_bigint::BigInt;
use num_rational::BigRational;
use pinned_groups::{PinnedModel, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_zones::PuiseuxScalar;

use crate::{cli_err, CliError};

/// Numerators and denominators of sampled ratios lie in 1..=BOUND.
pub const BOUND: i64 = 1000;

const LEADING_EXPONENTS: [(i64, i64); 6] = [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1), (3, 2)];

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub struct Sampler(ChaCha8Rng);

impl Sampler {
    pub fn new(seed: u64, stream: &str) -> Self {
        Sampler(ChaCha8Rng::seed_from_u64(seed ^ fnv1a(stream)))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.0.gen_range(0..n)
    }

    pub fn pick<'a, T>(&mut self, v: &'a [T]) -> &'a T {
        &v[self.index(v.len())]
    }

    pub fn ratio(&mut self) -> Scalar {
        Scalar::from_ratio(self.0.gen_range(1..=BOUND), self.0.gen_range(1..=BOUND))
    }

    pub fn ratios(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.ratio()).collect()
    }

    /// A positive series known up to O(ξ^{v+2}): leading exponent v from a fixed list and
    /// a tail of three terms at v+1/2, v+1, v+3/2 with coefficients of either sign.
    pub fn series(&mut self) -> Result<PuiseuxScalar, CliError> {
        let (n, d) = LEADING_EXPONENTS[self.index(LEADING_EXPONENTS.len())];
        let lead = BigRational::new(BigInt::from(n), BigInt::from(d));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut terms = vec![(lead.clone(), self.ratio())];
        let mut e = lead;
        for _ in 0..3 {
            e += &half;
            let c = self.ratio();
            terms.push((e.clone(), if self.0.gen_bool(0.5) { c } else { c.neg() }));
        }
        PuiseuxScalar::new(terms, Some(e + half)).map_err(cli_err)
    }

    pub fn series_vec(&mut self, n: usize) -> Result<Vec<PuiseuxScalar>, CliError> {
        (0..n).map(|_| self.series()).collect()
    }

    /// Coordinates of s·τ(s) for a random positive torus element s.
    pub fn tau_torus(&mut self, model: &PinnedModel) -> Result<Vec<Scalar>, CliError> {
        let s = self.ratios(model.torus_rank());
        let ts = model.tau_torus_coords(&s).map_err(cli_err)?;
        Ok(s.iter().zip(&ts).map(|(a, b)| a.mul(b)).collect())
    }
}
