//! Exact invariants of numerical semigroups and the universal symmetric
//! polynomials `T_n`.
//!
//! Everything in this crate is exact: scalars are arbitrary-precision
//! rationals, polynomials carry big-integer coefficients, and power series
//! are truncated at an explicit order. The arithmetic kernels in [`exact`]
//! are generic over a [`Coefficient`] ring so the same series code runs over
//! rationals and over symbolic polynomials in the power sums `σ_k`.
//!
//! The modules build on each other bottom-up:
//!
//! - [`exact`]: polynomials, truncated series, the coefficient trait
//! - [`semigroup`]: generator validation, gaps, Frobenius number, `σ_k`, `δ_k`
//! - [`hilbert`]: gap/product polynomials, Hilbert numerator, `ℭ_r`, `K_p`
//! - [`universal`]: `T_n` numerically and symbolically, Bernoulli and
//!   zig-zag numbers, umbral `f_r`
//! - [`verify`]: exact per-identity verification reports

pub mod error;
pub mod exact;
pub mod hilbert;
pub mod random;
pub mod semigroup;
pub mod universal;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Coefficient, Polynomial, Series};
pub use hilbert::{HilbertData, SyzygyValues};
pub use semigroup::{GapData, GeneratorStats, SemigroupSpec};
pub use universal::sigma::SigmaPolynomial;
pub use verify::{CheckRecord, CheckValue, IdentityId, Status, VerificationReport};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Dense polynomial with big-integer coefficients (`Q_S`, `P_S`, `Φ_S`).
pub type IntPolynomial = Polynomial<Integer>;

/// Truncated power series with rational coefficients.
pub type RationalSeries = Series<Rational>;

/// Truncated power series whose coefficients are polynomials in `σ_k`.
pub type SigmaSeries = Series<SigmaPolynomial>;
