use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use super::Coefficient;
use crate::error::{Error, Result};
use crate::Rational;

/// Power series truncated after `t^order`.
///
/// Coefficients of `t^0..=t^order` are significant. Binary operations on
/// series of different orders yield the smaller order.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

fn ratio(n: usize, d: usize) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl<T: Coefficient> Series<T> {
    /// Pads with zeros or drops coefficients so exactly `order + 1` remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<T>) -> Self {
        coeffs.resize(order + 1, T::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    /// `c·t^degree`, which is the zero series when `degree > order`.
    pub fn monomial(c: T, degree: usize, order: usize) -> Self {
        Self::from_fn(order, |k| if k == degree { c.clone() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `[t^k]`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order.min(self.order()), self.coeffs.clone())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect() }
    }

    /// Multiplication by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |n| if n >= k { self.coeffs[n - k].clone() } else { T::zero() })
    }

    /// Division by `t^k`; the top `k` coefficients become insignificant, so
    /// the order drops by `k`. Fails unless the low `k` coefficients vanish.
    pub fn unshift(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NonInvertibleConstantTerm);
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_recip().ok_or(Error::NonInvertibleConstantTerm)?;
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-(inv0.clone() * acc));
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// `exp` of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTermForExp);
        }
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(T::one());
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + (self.coeffs[k].clone() * out[n - k].clone()).scale(&ratio(k, n));
            }
            out.push(acc);
        }
        Ok(Series { coeffs: out })
    }

    /// `log` of a series with constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTermForLog);
        }
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        out.push(T::zero());
        for n in 1..=self.order() {
            let mut acc = T::zero();
            for k in 1..n {
                acc = acc + (out[k].clone() * self.coeffs[n - k].clone()).scale(&ratio(k, n));
            }
            out.push(self.coeffs[n].clone() - acc);
        }
        Ok(Series { coeffs: out })
    }
}

impl Series<Rational> {
    /// Truncation of `e^{ct}`.
    pub fn exp_at(c: &Rational, order: usize) -> Self {
        let mut term = Rational::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            if n > 0 {
                term = term * c / Rational::from_integer(BigInt::from(n));
            }
            coeffs.push(term.clone());
        }
        Series { coeffs }
    }

    /// `(e^t - 1)/t` truncated at `order`.
    pub fn exp_minus_one_over_t(order: usize) -> Self {
        let e = Self::exp_at(&Rational::one(), order + 1);
        Series { coeffs: e.coeffs[1..].to_vec() }
    }

    /// `n!·[t^n]`, the exponential-generating-function coefficient.
    pub fn egf_coeff(&self, n: usize) -> Rational {
        self.coeff(n) * Rational::from_integer(super::factorial(n as u32))
    }
}

impl<T: Coefficient> Add for &Series<T> {
    type Output = Series<T>;

    fn add(self, rhs: Self) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
    }
}

impl<T: Coefficient> Sub for &Series<T> {
    type Output = Series<T>;

    fn sub(self, rhs: Self) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
    }
}

impl<T: Coefficient> Mul for &Series<T> {
    type Output = Series<T>;

    fn mul(self, rhs: Self) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| {
            let mut acc = T::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a.clone() * b.clone();
                }
            }
            acc
        })
    }
}

impl<T: Coefficient> Neg for &Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        Series { coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Coefficient> $tr for Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: Self) -> Series<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Coefficient> Neg for Series<T> {
    type Output = Series<T>;

    fn neg(self) -> Series<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rational};
    use crate::RationalSeries;

    fn series(coeffs: &[(i64, i64)]) -> RationalSeries {
        let v: Vec<Rational> = coeffs.iter().map(|&(n, d)| rational(n, d)).collect();
        RationalSeries::from_coeffs(v.len() - 1, v)
    }

    #[test]
    fn exp_at_examples() {
        assert_eq!(RationalSeries::exp_at(&int(0), 3), series(&[(1, 1), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(RationalSeries::exp_at(&int(1), 2), series(&[(1, 1), (1, 1), (1, 2)]));
        assert_eq!(RationalSeries::exp_at(&int(3), 2), series(&[(1, 1), (3, 1), (9, 2)]));
    }

    #[test]
    fn log_of_truncated_exponential() {
        let s = series(&[(1, 1), (1, 1), (1, 2), (1, 6)]);
        assert_eq!(s.log().unwrap(), series(&[(0, 1), (1, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn exp_log_round_trip() {
        let s = series(&[(1, 1), (2, 1), (7, 1)]);
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn shifted_exponential() {
        assert_eq!(
            RationalSeries::exp_minus_one_over_t(4),
            series(&[(1, 1), (1, 2), (1, 6), (1, 24), (1, 120)])
        );
    }

    #[test]
    fn constant_term_errors() {
        let s = series(&[(0, 1), (1, 1)]);
        assert_eq!(s.recip(), Err(Error::NonInvertibleConstantTerm));
        assert_eq!(s.log(), Err(Error::BadConstantTermForLog));
        assert_eq!(series(&[(2, 1), (1, 1)]).exp(), Err(Error::BadConstantTermForExp));
        assert_eq!(series(&[(1, 1)]).div(&s), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = RationalSeries::exp_at(&int(1), 5);
        let b = RationalSeries::exp_at(&int(2), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(&a * &b, RationalSeries::exp_at(&int(3), 3));
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn reciprocal_of_geometric() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let s = series(&[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        assert_eq!(s.recip().unwrap(), series(&[(1, 1), (1, 1), (1, 1), (1, 1)]));
    }

    #[test]
    fn shift_and_unshift() {
        let s = series(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(s.shift(1), series(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(s.shift(1).unshift(1).unwrap(), series(&[(1, 1), (2, 1)]));
        assert!(s.unshift(1).is_err());
        assert_eq!(s.shift(5), RationalSeries::zero(2));
    }
}
