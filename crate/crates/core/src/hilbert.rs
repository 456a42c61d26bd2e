//! Gap and product polynomials, the Hilbert numerator `Q_S`, the
//! alternating syzygy power sums `ℭ_r` and the normalized invariants `K_p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::factorial;
use crate::semigroup::{GapData, SemigroupSpec};
use crate::{IntPolynomial, Rational};

/// `Φ_S = Σ_{g∈Δ} z^g`.
pub fn gap_polynomial(gaps: &GapData) -> IntPolynomial {
    IntPolynomial::from_terms(gaps.gaps().iter().map(|&g| (g as usize, BigInt::one())))
}

/// `1 − z^d`.
pub fn one_minus_z_pow(d: usize) -> IntPolynomial {
    IntPolynomial::from_terms([(0, BigInt::one()), (d, -BigInt::one())])
}

/// `P_S = Π (1 − z^{d_i})`, expanded.
pub fn product_polynomial(spec: &SemigroupSpec) -> IntPolynomial {
    spec.generators()
        .iter()
        .fold(IntPolynomial::one(), |acc, &d| &acc * &one_minus_z_pow(d as usize))
}

#[derive(Clone, Debug, PartialEq)]
pub struct HilbertData {
    pub phi: IntPolynomial,
    pub prod: IntPolynomial,
    pub numerator: IntPolynomial,
}

impl HilbertData {
    pub fn new(spec: &SemigroupSpec, gaps: &GapData) -> Result<Self> {
        hilbert_numerator(spec, gaps)
    }

    /// `1 − Q_S`.
    pub fn one_minus_numerator(&self) -> IntPolynomial {
        &IntPolynomial::one() - &self.numerator
    }

    /// `ℭ_r = Σ_n n^r·[z^n](1 − Q_S)`, with `0^0 = 1`.
    pub fn syzygy_sum(&self, r: u32) -> Rational {
        Rational::from_integer(self.one_minus_numerator().power_sum(r))
    }
}

/// `Q_S = P_S/(1 − z) − Φ_S·P_S`.
pub fn hilbert_numerator(spec: &SemigroupSpec, gaps: &GapData) -> Result<HilbertData> {
    let phi = gap_polynomial(gaps);
    let prod = product_polynomial(spec);
    let quotient = prod.div_exact(&one_minus_z_pow(1))?;
    let numerator = &quotient - &(&phi * &prod);
    Ok(HilbertData { phi, prod, numerator })
}

pub fn alternating_syzygy_sum(h: &HilbertData, r: u32) -> Rational {
    h.syzygy_sum(r)
}

/// `K_p = ℭ_{m+p} / ((−1)^m·π_m·(m+p)!/p!)`.
pub fn k_invariant(spec: &SemigroupSpec, h: &HilbertData, p: u32) -> Rational {
    let m = spec.m() as u32;
    let c = h.syzygy_sum(m + p);
    let mut denom = spec.pi() * factorial(m + p) / factorial(p);
    if m % 2 == 1 {
        denom = -denom;
    }
    c / Rational::from_integer(denom)
}

/// `ℭ_r` for `0 ≤ r ≤ r_max` and `K_p` for `0 ≤ p ≤ p_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyValues {
    pub c: BTreeMap<u32, Rational>,
    pub k: BTreeMap<u32, Rational>,
}

impl SyzygyValues {
    pub fn compute(spec: &SemigroupSpec, h: &HilbertData, p_max: u32) -> Self {
        let m = spec.m() as u32;
        let c = (0..=m + p_max).map(|r| (r, h.syzygy_sum(r))).collect();
        let k = (0..=p_max).map(|p| (p, k_invariant(spec, h, p))).collect();
        SyzygyValues { c, k }
    }
}

/// The three clauses `ℭ_0 = 1`, `ℭ_r = 0` for `1 ≤ r ≤ m−2`,
/// `ℭ_{m−1} = (−1)^m (m−1)! π_m`, as `(r, actual, expected)` triples.
/// Only meaningful for `m ≥ 2`; returns `None` for `m = 1`.
pub fn low_syzygy_expectations(
    spec: &SemigroupSpec,
    h: &HilbertData,
) -> Option<Vec<(u32, Rational, Rational)>> {
    let m = spec.m() as u32;
    if m < 2 {
        return None;
    }
    let mut out = vec![(0, h.syzygy_sum(0), Rational::one())];
    for r in 1..=m.saturating_sub(2) {
        out.push((r, h.syzygy_sum(r), Rational::zero()));
    }
    let mut top = factorial(m - 1) * spec.pi();
    if m % 2 == 1 {
        top = -top;
    }
    out.push((m - 1, h.syzygy_sum(m - 1), Rational::from_integer(top)));
    Some(out)
}
