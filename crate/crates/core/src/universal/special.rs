use num_bigint::BigInt;
use num_traits::One;

use crate::exact::int;
use crate::{Rational, RationalSeries};

/// Sign of `B_1`; every other Bernoulli number is the same in both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BernoulliConvention {
    /// `B_1 = +1/2`, generating function `t/(1 − e^{−t})`.
    Plus,
    /// `B_1 = −1/2`, generating function `t/(e^t − 1)`.
    Minus,
}

/// `B_0..=B_n` under the given convention.
pub fn bernoulli_table(n: usize, convention: BernoulliConvention) -> Vec<Rational> {
    let c = match convention {
        BernoulliConvention::Plus => int(-1),
        BernoulliConvention::Minus => int(1),
    };
    // (e^{ct} − 1)/(ct), then invert: ct/(e^{ct} − 1)
    let mut term = Rational::one();
    let denom = RationalSeries::from_fn(n, |k| {
        if k > 0 {
            term = &term * &c / Rational::from_integer(BigInt::from(k + 1));
        }
        term.clone()
    });
    let gf = denom.recip().unwrap_or_else(|_| unreachable!("constant term is 1"));
    (0..=n).map(|k| gf.egf_coeff(k)).collect()
}

/// `B_n` with `B_1 = +1/2`.
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_table(n, BernoulliConvention::Plus).pop().unwrap()
}

/// Zig-zag numbers `A_0..=A_n`: `sec x + tan x = Σ A_j x^j/j!`.
pub fn zigzag_table(n: usize) -> Vec<Rational> {
    let fact = |k: usize| Rational::from_integer(crate::exact::factorial(k as u32));
    let sign = |k: usize| if k % 2 == 0 { int(1) } else { int(-1) };
    let cos = RationalSeries::from_fn(n, |k| if k % 2 == 0 { sign(k / 2) / fact(k) } else { int(0) });
    let one_plus_sin = RationalSeries::from_fn(n, |k| match k {
        0 => int(1),
        _ if k % 2 == 1 => sign(k / 2) / fact(k),
        _ => int(0),
    });
    let s = one_plus_sin.div(&cos).unwrap_or_else(|_| unreachable!("cos(0) = 1"));
    (0..=n).map(|k| s.egf_coeff(k)).collect()
}

pub fn zigzag(j: usize) -> Rational {
    zigzag_table(j).pop().unwrap()
}
