use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{Rational, RationalSeries};

/// Dense univariate polynomial, coefficients indexed by degree.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has no coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> Polynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated
    /// degrees are summed.
    pub fn from_terms<I: IntoIterator<Item = (usize, T)>>(terms: I) -> Self {
        let mut coeffs: Vec<T> = Vec::new();
        for (deg, c) in terms {
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, T::zero());
            }
            coeffs[deg] = coeffs[deg].clone() + c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn monomial(coeff: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn eval_at_one(&self) -> T {
        self.coeffs.iter().cloned().fold(T::zero(), |acc, c| acc + c)
    }
}

impl<T: Clone + Zero + One> Polynomial<T> {
    pub fn one() -> Self {
        Polynomial { coeffs: vec![T::one()] }
    }
}

impl<T> Polynomial<T>
where
    T: Clone + Integer,
{
    /// Exact quotient `self / divisor` in the integer polynomial ring.
    ///
    /// Fails with [`Error::NonExactDivision`] if a leading coefficient does
    /// not divide or a nonzero remainder is left over.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::NonExactDivision);
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(Error::NonExactDivision);
        }
        let mut quot = vec![T::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - q.clone() * c.clone();
            }
            quot[shift] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl Polynomial<BigInt> {
    /// Truncation of `p(e^t)` to order `order`, built as `Σ_k p_k·e^{kt}`.
    pub fn subst_exp(&self, order: usize) -> RationalSeries {
        self.terms()
            .fold(RationalSeries::zero(order), |acc, (k, c)| {
                let e = RationalSeries::exp_at(&Rational::from_integer(BigInt::from(k)), order);
                acc + e.scale(&Rational::from_integer(c.clone()))
            })
    }

    /// `Σ_k p_k·k^r` with `0^0 = 1`.
    pub fn power_sum(&self, r: u32) -> BigInt {
        self.terms()
            .map(|(k, c)| c * num_traits::pow(BigInt::from(k), r as usize))
            .sum()
    }
}

impl<T: Clone + Zero> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<T: Clone + Zero + Sub<Output = T>> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

/// Sparse `degree:coefficient` pairs in ascending degree; `0` for the zero
/// polynomial.
impl<T: fmt::Display + Clone + Zero> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (deg, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{deg}:{c}")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display + Clone + Zero> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntPolynomial;

    fn poly(terms: &[(usize, i64)]) -> IntPolynomial {
        IntPolynomial::from_terms(terms.iter().map(|&(d, c)| (d, BigInt::from(c))))
    }

    fn one_minus_z(d: usize) -> IntPolynomial {
        poly(&[(0, 1), (d, -1)])
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&one_minus_z(1) * &poly(&[(0, 1), (1, 1)]), one_minus_z(2));
    }

    #[test]
    fn product_of_two_binomials() {
        assert_eq!(
            &one_minus_z(3) * &one_minus_z(5),
            poly(&[(0, 1), (3, -1), (5, -1), (8, 1)])
        );
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = IntPolynomial::from_coeffs(vec![1.into(), 0.into(), 0.into()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(&one_minus_z(2) - &one_minus_z(2), IntPolynomial::zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn geometric_quotients() {
        assert_eq!(
            one_minus_z(6).div_exact(&one_minus_z(1)).unwrap(),
            poly(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)])
        );
        assert_eq!(
            one_minus_z(15).div_exact(&one_minus_z(3)).unwrap(),
            poly(&[(0, 1), (3, 1), (6, 1), (9, 1), (12, 1)])
        );
    }

    #[test]
    fn non_divisible_is_an_error() {
        assert_eq!(one_minus_z(2).div_exact(&one_minus_z(3)), Err(Error::NonExactDivision));
        assert_eq!(one_minus_z(2).div_exact(&IntPolynomial::zero()), Err(Error::NonExactDivision));
        // 2z does not divide z over the integers
        assert_eq!(poly(&[(1, 1)]).div_exact(&poly(&[(1, 2)])), Err(Error::NonExactDivision));
    }

    #[test]
    fn subst_exp_of_one_minus_z15() {
        let s = one_minus_z(15).subst_exp(2);
        assert_eq!(s.coeffs(), &[int(0), int(-15), rational(-225, 2)]);
        assert_eq!(IntPolynomial::one().subst_exp(4), RationalSeries::one(4));
    }

    #[test]
    fn subst_exp_of_gap_polynomial_35() {
        let phi = poly(&[(1, 1), (2, 1), (4, 1), (7, 1)]);
        let s = phi.subst_exp(1);
        assert_eq!(s.coeffs(), &[int(4), int(14)]);
        let s = phi.subst_exp(6);
        for n in 0..=6u32 {
            let g = 1 + 2i64.pow(n) + 4i64.pow(n) + 7i64.pow(n);
            let scaled = s.coeff(n as usize) * Rational::from_integer(crate::exact::factorial(n));
            assert_eq!(scaled, int(g));
        }
    }

    #[test]
    fn sparse_display() {
        assert_eq!(poly(&[(0, 1), (10, -1), (12, -1), (22, 1)]).to_string(), "0:1 10:-1 12:-1 22:1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    use crate::exact::{int, rational};
}
