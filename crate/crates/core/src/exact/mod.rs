//! Exact arithmetic: rationals, univariate polynomials and truncated power
//! series. Nothing in this crate uses floating point.

mod fraction;
mod poly;
mod series;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

pub use fraction::Fraction;
pub use poly::UniPoly;
pub use series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("not an integer: {0}")]
    NotInteger(Fraction),
    #[error("series constant term must be 1, found {0}")]
    NonUnitConstantTerm(Fraction),
    #[error("cannot parse {0:?} as a fraction")]
    Parse(String),
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient with a big top argument, `C(n, k)` for `n >= 0`.
pub fn binomial_big(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}
