//! Generator validation, gap sets and generator power sums.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Default guard rail on `min(d)·max(d)`.
pub const DEFAULT_BOUND: u64 = 10_000_000;

/// A validated generator list `⟨d_1, …, d_m⟩` with gcd 1.
///
/// The list is kept exactly as given: duplicates and non-minimal generators
/// are allowed, and `m` counts list entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupSpec {
    generators: Vec<u64>,
}

impl SemigroupSpec {
    pub fn new(generators: &[i64]) -> Result<Self> {
        Self::with_bound(generators, DEFAULT_BOUND)
    }

    /// Like [`SemigroupSpec::new`], rejecting lists with
    /// `min(d)·max(d) > bound`.
    pub fn with_bound(generators: &[i64], bound: u64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens = Vec::with_capacity(generators.len());
        for (index, &value) in generators.iter().enumerate() {
            if value < 1 {
                return Err(Error::NonPositiveGenerator { index, value });
            }
            gens.push(value as u64);
        }
        let gcd = gens.iter().fold(0u64, |g, &d| g.gcd(&d));
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }
        let (lo, hi) = (gens.iter().min().unwrap(), gens.iter().max().unwrap());
        let product = u128::from(*lo) * u128::from(*hi);
        if product > u128::from(bound) {
            return Err(Error::SemigroupTooLarge { product, bound });
        }
        Ok(SemigroupSpec { generators: gens })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn m(&self) -> usize {
        self.generators.len()
    }

    /// `π_m`, the product of all generators.
    pub fn pi(&self) -> BigInt {
        self.generators.iter().fold(BigInt::one(), |acc, &d| acc * d)
    }

    /// Generators as rationals, the variable vector for `T_n`.
    pub fn as_variables(&self) -> Vec<Rational> {
        self.generators.iter().map(|&d| Rational::from_integer(d.into())).collect()
    }

    pub fn gaps(&self) -> GapData {
        compute_gaps(self)
    }

    pub fn stats(&self, k_max: usize) -> GeneratorStats {
        generator_stats(self, k_max)
    }
}

impl std::fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(u64::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// The gap set `Δ` with its Frobenius number and genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapData {
    gaps: Vec<u64>,
}

impl GapData {
    /// Wraps a gap list, sorting and deduplicating it.
    pub fn from_gaps(mut gaps: Vec<u64>) -> Self {
        gaps.sort_unstable();
        gaps.dedup();
        GapData { gaps }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Largest gap, `-1` when there are none.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&g| g as i64)
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    /// `G_r = Σ_{g∈Δ} g^r`.
    pub fn power_sum(&self, r: u32) -> BigInt {
        self.gaps.iter().map(|&g| num_traits::pow(BigInt::from(g), r as usize)).sum()
    }
}

/// Smallest semigroup element in each residue class modulo the smallest
/// generator, by Dijkstra over the residue graph.
fn apery_set(spec: &SemigroupSpec) -> (u64, Vec<u64>) {
    let a = *spec.generators.iter().min().unwrap();
    let modulus = a as usize;
    let mut dist = vec![u64::MAX; modulus];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((w, r))) = heap.pop() {
        if w > dist[r] {
            continue;
        }
        for &d in &spec.generators {
            let next = (r + (d % a) as usize) % modulus;
            let cand = w + d;
            if cand < dist[next] {
                dist[next] = cand;
                heap.push(Reverse((cand, next)));
            }
        }
    }
    (a, dist)
}

pub fn compute_gaps(spec: &SemigroupSpec) -> GapData {
    let (a, apery) = apery_set(spec);
    let mut gaps = Vec::new();
    for w in apery {
        // every n ≡ w (mod a) below w is a gap
        let mut n = w;
        while n >= a {
            n -= a;
            if n > 0 {
                gaps.push(n);
            }
        }
    }
    GapData::from_gaps(gaps)
}

pub fn gap_power_sum(gaps: &GapData, r: u32) -> Rational {
    Rational::from_integer(gaps.power_sum(r))
}

/// `σ_k = Σ d_i^k` and `δ_k = (σ_k − 1)/2^k` for `1 ≤ k ≤ K`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorStats {
    sigma: Vec<Rational>,
    delta: Vec<Rational>,
}

impl GeneratorStats {
    pub fn k_max(&self) -> usize {
        self.sigma.len()
    }

    /// `σ_k` for `1 ≤ k ≤ K`.
    pub fn sigma(&self, k: usize) -> &Rational {
        &self.sigma[k - 1]
    }

    pub fn delta(&self, k: usize) -> &Rational {
        &self.delta[k - 1]
    }

    /// `σ_1..σ_K`, index 0 holding `σ_1`.
    pub fn sigmas(&self) -> &[Rational] {
        &self.sigma
    }

    pub fn deltas(&self) -> &[Rational] {
        &self.delta
    }
}

/// Power sums `σ_k` of an arbitrary variable vector, `k = 1..=k_max`.
pub fn power_sums(x: &[Rational], k_max: usize) -> Vec<Rational> {
    (1..=k_max)
        .map(|k| x.iter().map(|v| num_traits::pow(v.clone(), k)).fold(Rational::zero(), |a, b| a + b))
        .collect()
}

/// `δ_k = (σ_k − 1)/2^k` from `σ_1..σ_K`.
pub fn shifted_power_sums(sigma: &[Rational]) -> Vec<Rational> {
    sigma
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let two_k = Rational::from_integer(BigInt::one() << (i + 1));
            (s - Rational::one()) / two_k
        })
        .collect()
}

pub fn generator_stats(spec: &SemigroupSpec, k_max: usize) -> GeneratorStats {
    let sigma = power_sums(&spec.as_variables(), k_max);
    let delta = shifted_power_sums(&sigma);
    GeneratorStats { sigma, delta }
}
