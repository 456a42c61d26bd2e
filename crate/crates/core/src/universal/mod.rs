//! The universal symmetric polynomials `T_n` and their companions.
//!
//! `T_n(x) = n!·[t^n] A(t)` with `A(t) = Π (e^{x_i t} − 1)/(x_i t)`. Since
//! `log A(t) = Σ_k λ_k σ_k t^k` where `λ_k = [u^k] log((e^u − 1)/u)`, the
//! symbolic form in the power sums `σ_k` comes from a single series
//! exponential over [`SigmaPolynomial`] coefficients.

pub mod sigma;
mod special;
mod tpoly;
mod umbral;

pub use sigma::{Monomial, SigmaPolynomial};
pub use special::{bernoulli, bernoulli_table, zigzag, zigzag_table, BernoulliConvention};
pub use tpoly::{
    brute_force_p, series_a, series_b, t_delta, t_from_inclusion_exclusion, t_numeric,
    t_symbolic, t_symbolic_table, LambdaTable,
};
pub use umbral::{f_umbral, sign_flipped, umbral_expansion, SignFlipReading};
