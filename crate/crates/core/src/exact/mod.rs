//! Exact arithmetic kernel: the [`Coefficient`] ring trait, dense
//! polynomials and truncated power series.

mod poly;
mod series;

pub use poly::Polynomial;
pub use series::Series;

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

/// A commutative ring containing the rationals, as far as the series code
/// needs it: ring operations, scaling by a rational constant, and inversion
/// of units.
pub trait Coefficient:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn scale(&self, factor: &Rational) -> Self;

    /// Multiplicative inverse, `None` for non-units.
    fn try_recip(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }

    fn try_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn pow_rational(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}
