//! Seeded random semigroups and rational sample points.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::rational;
use crate::semigroup::SemigroupSpec;
use crate::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of randomly drawn generator lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemigroupSampler {
    pub m_min: usize,
    pub m_max: usize,
    pub d_min: u64,
    pub d_max: u64,
}

impl SemigroupSampler {
    pub fn new(m_max: usize, d_max: u64) -> Self {
        SemigroupSampler { m_min: 2, m_max, d_min: 2, d_max }
    }

    /// Draws `m` uniformly, then generators uniformly until the gcd is 1.
    /// `m = 1` always yields `⟨1⟩`.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> SemigroupSpec {
        let m = rng.gen_range(self.m_min.max(1)..=self.m_max.max(self.m_min));
        if m == 1 {
            return SemigroupSpec::new(&[1]).expect("<1> is valid");
        }
        loop {
            let gens: Vec<i64> = (0..m).map(|_| rng.gen_range(self.d_min..=self.d_max) as i64).collect();
            if gens.iter().fold(0i64, |g, d| g.gcd(d)) == 1 {
                if let Ok(spec) = SemigroupSpec::new(&gens) {
                    return spec;
                }
            }
        }
    }

    pub fn sample_many(&self, seed: u64, count: usize) -> Vec<SemigroupSpec> {
        let mut rng = rng(seed);
        (0..count).map(|_| self.sample(&mut rng)).collect()
    }
}

/// Nonzero rational with `|num| ≤ num_max` and `1 ≤ den ≤ den_max`.
pub fn nonzero_rational<R: Rng>(rng: &mut R, num_max: i64, den_max: i64) -> Rational {
    loop {
        let n = rng.gen_range(-num_max..=num_max);
        if n != 0 {
            return rational(n, rng.gen_range(1..=den_max));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_sampling_is_reproducible() {
        let s = SemigroupSampler::new(5, 40);
        assert_eq!(s.sample_many(7, 20), s.sample_many(7, 20));
        assert_ne!(s.sample_many(7, 20), s.sample_many(8, 20));
        for spec in s.sample_many(1, 50) {
            assert!((2..=5).contains(&spec.m()));
            assert!(spec.generators().iter().all(|&d| (2..=40).contains(&d)));
        }
    }
}
