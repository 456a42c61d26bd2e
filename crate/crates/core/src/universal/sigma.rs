//! Sparse polynomials in the abstract power sums `σ_1, σ_2, …`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Coefficient;
use crate::Rational;

/// Exponent vector; index `k - 1` holds the exponent of `σ_k`. Trailing
/// zeros are stripped so that equal monomials compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// `σ_k`.
    pub fn var(k: usize) -> Self {
        let mut exps = vec![0; k];
        exps[k - 1] = 1;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `σ_k`.
    pub fn exponent(&self, k: usize) -> u32 {
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    /// Degree with `σ_k` carrying weight `k`.
    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &e)| (i as u32 + 1) * e).sum()
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        let n = self.0.len().max(rhs.0.len());
        Monomial((0..n).map(|i| self.0.get(i).unwrap_or(&0) + rhs.0.get(i).unwrap_or(&0)).collect())
    }

    fn gcd(&self, rhs: &Monomial) -> Monomial {
        let n = self.0.len().min(rhs.0.len());
        Monomial::new((0..n).map(|i| self.0[i].min(rhs.0[i])).collect())
    }

    fn div(&self, rhs: &Monomial) -> Monomial {
        Monomial::new(self.0.iter().enumerate().map(|(i, &e)| e - rhs.0.get(i).unwrap_or(&0)).collect())
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "s{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Polynomial in `σ_1, σ_2, …` with exact rational coefficients. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SigmaPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl SigmaPolynomial {
    pub fn constant(c: Rational) -> Self {
        Self::from_terms([(Monomial::default(), c)])
    }

    /// `σ_k`.
    pub fn var(k: usize) -> Self {
        Self::from_terms([(Monomial::var(k), Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut out = SigmaPolynomial::default();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in canonical order: descending lexicographic on the exponent
    /// vector `(e_1, e_2, …)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest `k` with `σ_k` present.
    pub fn max_index(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    /// `Some(w)` if every monomial has weight `w`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next().unwrap_or(0);
        weights.all(|w| w == first).then_some(first)
    }

    /// Evaluates at `σ_k = values[k - 1]`.
    ///
    /// Panics if a present `σ_k` has no value supplied.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        assert!(
            self.max_index() <= values.len(),
            "evaluation needs σ_1..σ_{}, got {} values",
            self.max_index(),
            values.len()
        );
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .enumerate()
                    .fold(c.clone(), |acc, (i, &e)| acc * num_traits::pow(values[i].clone(), e as usize))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Substitutes `σ_k ↦ −σ_k` for every `k` with `flip(k)`.
    pub fn flip_signs(&self, flip: impl Fn(usize) -> bool) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let odd = m.0.iter().enumerate().filter(|&(i, _)| flip(i + 1)).map(|(_, &e)| e).sum::<u32>() % 2 == 1;
            (m.clone(), if odd { -c.clone() } else { c.clone() })
        }))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients after multiplying by [`Self::common_denominator`].
    pub fn cleared(&self) -> Vec<(Monomial, BigInt)> {
        let l = Rational::from_integer(self.common_denominator());
        self.terms().map(|(m, c)| (m.clone(), (c * &l).to_integer())).collect()
    }
}

impl Zero for SigmaPolynomial {
    fn zero() -> Self {
        SigmaPolynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SigmaPolynomial {
    fn one() -> Self {
        SigmaPolynomial::constant(Rational::one())
    }
}

impl Add for SigmaPolynomial {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for SigmaPolynomial {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for SigmaPolynomial {
    type Output = Self;

    fn neg(self) -> Self {
        SigmaPolynomial { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for SigmaPolynomial {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = SigmaPolynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Coefficient for SigmaPolynomial {
    fn scale(&self, factor: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c * factor)))
    }

    fn try_recip(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && m.is_one() => Some(Self::constant(c.recip())),
            _ => None,
        }
    }
}

/// Canonical text form, e.g. `(3*s1^2 + s2)/12` or `s1*(s1^2 + s2)/8`:
/// denominators are cleared and a common monomial factor is pulled out of
/// multi-term polynomials.
impl fmt::Display for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let den = self.common_denominator();
        let cleared = self.cleared();
        let factor = if cleared.len() > 1 {
            cleared.iter().skip(1).fold(cleared[0].0.clone(), |g, (m, _)| g.gcd(m))
        } else {
            Monomial::default()
        };
        let mut inner = String::new();
        for (i, (m, c)) in cleared.iter().enumerate() {
            let m = m.div(&factor);
            if i == 0 {
                if c.is_negative() {
                    inner.push('-');
                }
            } else {
                inner.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let a = c.abs();
            if m.is_one() {
                inner.push_str(&a.to_string());
            } else if a.is_one() {
                inner.push_str(&m.to_string());
            } else {
                inner.push_str(&format!("{a}*{m}"));
            }
        }
        let body = if !factor.is_one() {
            format!("{factor}*({inner})")
        } else if cleared.len() > 1 && !den.is_one() {
            format!("({inner})")
        } else {
            inner
        };
        if den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "{body}/{den}")
        }
    }
}

impl fmt::Debug for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SigmaPolynomial[{self}]")
    }
}
