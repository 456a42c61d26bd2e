use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, Coefficient};
use crate::{Rational, RationalSeries, SigmaPolynomial, SigmaSeries};

/// `λ_k = [u^k] log((e^u − 1)/u)` for `k = 1..=K`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaTable {
    lambda: Vec<Rational>,
}

impl LambdaTable {
    pub fn new(k_max: usize) -> Self {
        let log = RationalSeries::exp_minus_one_over_t(k_max)
            .log()
            .unwrap_or_else(|_| unreachable!("(e^u - 1)/u has constant term 1"));
        LambdaTable { lambda: log.coeffs()[1..].to_vec() }
    }

    pub fn k_max(&self) -> usize {
        self.lambda.len()
    }

    /// `λ_k`, `1 ≤ k ≤ K`.
    pub fn get(&self, k: usize) -> &Rational {
        &self.lambda[k - 1]
    }
}

/// One factor `(e^{xt} − 1)/(xt)`, coefficients `x^k/(k+1)!`.
fn shifted_exp_factor(x: &Rational, order: usize) -> RationalSeries {
    let mut term = Rational::one();
    RationalSeries::from_fn(order, |k| {
        if k > 0 {
            term = &term * x / Rational::from_integer(BigInt::from(k + 1));
        }
        term.clone()
    })
}

fn check_nonzero(x: &[Rational]) -> Result<()> {
    match x.iter().position(Zero::is_zero) {
        Some(index) => Err(Error::ZeroVariable { index }),
        None => Ok(()),
    }
}

/// `A(t) = Π_i (e^{x_i t} − 1)/(x_i t)`.
pub fn series_a(x: &[Rational], order: usize) -> Result<RationalSeries> {
    check_nonzero(x)?;
    Ok(x.iter().fold(RationalSeries::one(order), |acc, xi| &acc * &shifted_exp_factor(xi, order)))
}

/// `B(t) = t/(e^t − 1)·A(t)`.
pub fn series_b(x: &[Rational], order: usize) -> Result<RationalSeries> {
    let a = series_a(x, order)?;
    let bern = RationalSeries::exp_minus_one_over_t(order).recip()?;
    Ok(&bern * &a)
}

/// `T_n(x) = n!·[t^n] A(t)`.
pub fn t_numeric(x: &[Rational], n: usize) -> Result<Rational> {
    Ok(series_a(x, n)?.egf_coeff(n))
}

/// `T_n(δ) = n!/2^n·[t^n] B(t)`, with `δ_k = (σ_k(x) − 1)/2^k`.
pub fn t_delta(x: &[Rational], n: usize) -> Result<Rational> {
    let two_n = Rational::from_integer(BigInt::one() << n);
    Ok(series_b(x, n)?.egf_coeff(n) / two_n)
}

/// `P_n = Σ_{∅≠I⊆[m]} (−1)^{|I|+1} (Σ_{i∈I} x_i)^n`.
pub fn brute_force_p(x: &[Rational], n: u32) -> Rational {
    let m = x.len();
    let mut total = Rational::zero();
    for mask in 1u64..(1u64 << m) {
        let sum = (0..m).filter(|i| mask >> i & 1 == 1).fold(Rational::zero(), |a, i| a + &x[i]);
        let term = num_traits::pow(sum, n as usize);
        if mask.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `T_{n−m}(x) = P_n / (Π x_i · (−1)^{m+1} n!/(n−m)!)`, for `n ≥ m`.
pub fn t_from_inclusion_exclusion(x: &[Rational], n: u32) -> Result<Rational> {
    let m = x.len() as u32;
    if n < m {
        return Err(Error::InvalidParameter(format!("need n >= m, got n = {n}, m = {m}")));
    }
    check_nonzero(x)?;
    let prod = x.iter().fold(Rational::one(), |a, v| a * v);
    let mut falling = Rational::from_integer(factorial(n) / factorial(n - m));
    if m % 2 == 0 {
        falling = -falling;
    }
    Ok(brute_force_p(x, n) / (prod * falling))
}

/// `T_0..=T_n` as polynomials in `σ_1..σ_n`.
pub fn t_symbolic_table(n: usize) -> Vec<SigmaPolynomial> {
    let lambda = LambdaTable::new(n.max(1));
    let log_a = SigmaSeries::from_fn(n, |k| {
        if k == 0 {
            SigmaPolynomial::zero()
        } else {
            SigmaPolynomial::var(k).scale(lambda.get(k))
        }
    });
    let a = log_a.exp().unwrap_or_else(|_| unreachable!("log A has zero constant term"));
    a.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c.scale(&Rational::from_integer(factorial(k as u32))))
        .collect()
}

pub fn t_symbolic(n: usize) -> SigmaPolynomial {
    t_symbolic_table(n).pop().unwrap_or_else(SigmaPolynomial::one)
}
