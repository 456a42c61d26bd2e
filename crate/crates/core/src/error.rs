use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator #{index} is {value}, expected a positive integer")]
    NonPositiveGenerator { index: usize, value: i64 },
    #[error("generators have gcd {gcd}, expected 1")]
    GcdNotOne { gcd: u64 },
    #[error("min(d)*max(d) = {product} exceeds the bound {bound}")]
    SemigroupTooLarge { product: u128, bound: u64 },
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("series constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("series logarithm needs constant term 1")]
    BadConstantTermForLog,
    #[error("series exponential needs constant term 0")]
    BadConstantTermForExp,
    #[error("variable #{index} is zero")]
    ZeroVariable { index: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable variant name, used on the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator { .. } => "NonPositiveGenerator",
            Error::GcdNotOne { .. } => "GcdNotOne",
            Error::SemigroupTooLarge { .. } => "SemigroupTooLarge",
            Error::NonExactDivision => "NonExactDivision",
            Error::NonInvertibleConstantTerm => "NonInvertibleConstantTerm",
            Error::BadConstantTermForLog => "BadConstantTermForLog",
            Error::BadConstantTermForExp => "BadConstantTermForExp",
            Error::ZeroVariable { .. } => "ZeroVariable",
            Error::InvalidParameter(_) => "InvalidParameter",
        }
    }
}
