use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::special::{bernoulli_table, BernoulliConvention};
use crate::exact::factorial;
use crate::{Rational, RationalSeries};

/// `f_r(d) = r!·[t^r] e^{σ_1 t}·Π_i d_i t/(e^{d_i t} − 1)`.
///
/// This is the exponential generating function of the umbral power
/// `(σ_1 + Σ_i B_i d_i)^r` with `B_1 = −1/2`.
pub fn f_umbral(d: &[u64], r: usize) -> Rational {
    let sigma1: Rational = d.iter().map(|&v| Rational::from_integer(v.into())).sum();
    let mut series = RationalSeries::exp_at(&sigma1, r);
    for &di in d {
        let x = Rational::from_integer(di.into());
        let mut term = Rational::one();
        let factor = RationalSeries::from_fn(r, |k| {
            if k > 0 {
                term = &term * &x / Rational::from_integer(BigInt::from(k + 1));
            }
            term.clone()
        });
        let inv = factor.recip().unwrap_or_else(|_| unreachable!("constant term is 1"));
        series = &series * &inv;
    }
    series.egf_coeff(r)
}

/// Direct multinomial expansion of `(σ_1 + Σ_i B_i d_i)^r` with
/// `(B_i d_i)^k ↦ B_k d_i^k`, under either Bernoulli convention.
pub fn umbral_expansion(d: &[u64], r: usize, convention: BernoulliConvention) -> Rational {
    let bern = bernoulli_table(r, convention);
    let sigma1: Rational = d.iter().map(|&v| Rational::from_integer(v.into())).sum();
    let r_fact = factorial(r as u32);

    // distribute r among σ_1 (slot 0) and the m umbral slots
    fn walk(
        slot: usize,
        remaining: usize,
        d: &[u64],
        bern: &[Rational],
        acc: Rational,
        denom: BigInt,
        out: &mut Rational,
        r_fact: &BigInt,
    ) {
        if slot == d.len() {
            if remaining == 0 {
                *out += acc * Rational::new(r_fact.clone(), denom);
            }
            return;
        }
        for k in 0..=remaining {
            if bern[k].is_zero() {
                continue;
            }
            let dk = num_traits::pow(BigInt::from(d[slot]), k);
            let term = &acc * &bern[k] * Rational::from_integer(dk);
            walk(slot + 1, remaining - k, d, bern, term, &denom * factorial(k as u32), out, r_fact);
        }
    }

    let mut total = Rational::zero();
    for k0 in 0..=r {
        let acc = num_traits::pow(sigma1.clone(), k0);
        walk(0, r - k0, d, &bern, acc, factorial(k0 as u32), &mut total, &r_fact);
    }
    total
}

/// How to read "flip the signs of `σ_2` and `σ_n`" in the sign-flip
/// identity `f_n(σ) = T_n(σ_1, −σ_2, σ_3, …, σ_{n−1}, −σ_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignFlipReading {
    /// Signs alternate along the argument list: every even-indexed `σ_k`
    /// is negated.
    Alternating,
    /// Only `σ_2` and `σ_n` are negated (once each, so just `σ_2` at `n = 2`).
    Literal,
}

impl SignFlipReading {
    pub fn flips(self, k: usize, n: usize) -> bool {
        match self {
            SignFlipReading::Alternating => k % 2 == 0,
            SignFlipReading::Literal => k == 2 || k == n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SignFlipReading::Alternating => "alternating",
            SignFlipReading::Literal => "literal",
        }
    }
}

/// The argument vector `σ_1..σ_n` with the reading's sign flips applied.
pub fn sign_flipped(sigma: &[Rational], n: usize, reading: SignFlipReading) -> Vec<Rational> {
    sigma
        .iter()
        .enumerate()
        .map(|(i, s)| if reading.flips(i + 1, n) { -s.clone() } else { s.clone() })
        .collect()
}
