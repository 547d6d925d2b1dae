//! Bott's residue formula over isolated torus fixed points.
//!
//! Every family in this crate reduces to a list of [`LocalizationDatum`]:
//! the tangent weights at a fixed point and the weights of a bundle fiber
//! there. The engine turns those into
//!
//! ```text
//!     sum_p  numerator(fiber_p) / prod(tangent_p)
//! ```
//!
//! exactly, and insists that the result is an integer. The numerator is
//! either a top Segre class (conic family) or a top Chern class (planes).

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conic_space;
use crate::exact::{Fraction, UniPoly};
use crate::space::ambient_dimension;
use crate::symfun::{elementary_top, segre_top};
use crate::weights::{validate_conic_weights, WeightError, WeightVector};

/// Order of the Segre class for the conic family: `dim B = 5`.
pub const CONIC_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BottError {
    #[error("degenerate weights: {context}")]
    DegenerateWeights { context: String },
    #[error("fixed point {label} has {found} tangent weights, expected {expected}")]
    TangentCount { label: String, expected: usize, found: usize },
    #[error("localization inconsistency: Bott sum {total} is not an integer")]
    LocalizationInconsistency { total: Fraction, contributions: Vec<Contribution> },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Weights(#[from] WeightError),
}

impl BottError {
    /// True when a different choice of weights could succeed.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, BottError::DegenerateWeights { .. })
    }
}

/// Tangent and fiber weights at one isolated fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationDatum {
    pub label: String,
    pub tangent_weights: Vec<i64>,
    pub fiber_weights: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contribution {
    pub label: String,
    pub contribution: Fraction,
}

/// Result of the summation engine alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottSum {
    pub degree: BigInt,
    pub contributions: Vec<Contribution>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Conic,
    Plane,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub family: Family,
    pub d: u32,
    pub k: Option<usize>,
    pub n: usize,
}

/// A degree together with the data that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottReport {
    #[serde(with = "crate::serde_bigint")]
    pub degree: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub codimension: BigInt,
    #[serde(with = "crate::serde_bigint")]
    pub ambient_dimension: BigInt,
    pub contributions: Vec<Contribution>,
    pub weights_used: WeightVector,
    pub parameters: Parameters,
}

fn tangent_product(datum: &LocalizationDatum, order: usize) -> Result<Fraction, BottError> {
    if datum.tangent_weights.len() != order {
        return Err(BottError::TangentCount {
            label: datum.label.clone(),
            expected: order,
            found: datum.tangent_weights.len(),
        });
    }
    let product = datum
        .tangent_weights
        .iter()
        .fold(Fraction::one(), |acc, &w| acc * Fraction::from(w));
    if product.is_zero() {
        return Err(BottError::DegenerateWeights { context: format!("zero tangent weight at {}", datum.label) });
    }
    Ok(product)
}

fn bott_sum<F>(data: &[LocalizationDatum], order: usize, numerator: F) -> Result<BottSum, BottError>
where
    F: Fn(&[i64]) -> Fraction + Sync,
{
    let contributions = data
        .par_iter()
        .map(|datum| {
            let denominator = tangent_product(datum, order)?;
            let contribution = numerator(&datum.fiber_weights)
                .checked_div(&denominator)
                .map_err(|_| BottError::DegenerateWeights { context: format!("zero tangent weight at {}", datum.label) })?;
            Ok(Contribution { label: datum.label.clone(), contribution })
        })
        .collect::<Result<Vec<_>, BottError>>()?;
    let total: Fraction = contributions.iter().map(|c| &c.contribution).sum();
    match total.to_integer() {
        Ok(degree) => Ok(BottSum { degree, contributions }),
        Err(_) => Err(BottError::LocalizationInconsistency { total, contributions }),
    }
}

/// `sum_p s_m(fiber_p) / prod(tangent_p)`.
pub fn bott_sum_segre(data: &[LocalizationDatum], order: usize) -> Result<BottSum, BottError> {
    bott_sum(data, order, |ws| segre_top(ws, order))
}

/// `sum_p e_g(fiber_p) / prod(tangent_p)`.
pub fn bott_sum_chern_top(data: &[LocalizationDatum], order: usize) -> Result<BottSum, BottError> {
    bott_sum(data, order, |ws| elementary_top(ws, order))
}

/// Full report for foliations of degree `d` on `P^2` with an invariant
/// smooth conic.
pub fn conic_report(d: u32, w: &WeightVector) -> Result<BottReport, BottError> {
    if d < 2 {
        return Err(BottError::InvalidParameters(format!("conic family needs d >= 2, got {d}")));
    }
    w.expect_len(3)?;
    if !validate_conic_weights(w) {
        return Err(BottError::DegenerateWeights { context: format!("pairwise sums of weights {w} are not distinct") });
    }
    let data = conic_space::localization_data(d, w)?;
    let sum = bott_sum_segre(&data, CONIC_ORDER)?;
    Ok(BottReport {
        degree: sum.degree,
        codimension: conic_codimension(d),
        ambient_dimension: ambient_dimension(2, d),
        contributions: sum.contributions,
        weights_used: w.clone(),
        parameters: Parameters { family: Family::Conic, d, k: None, n: 2 },
    })
}

pub fn conic_degree(d: u32, w: &WeightVector) -> Result<BigInt, BottError> {
    conic_report(d, w).map(|r| r.degree)
}

/// `2(d - 1)`
pub fn conic_codimension(d: u32) -> BigInt {
    BigInt::from(2) * (BigInt::from(d) - 1)
}

/// Reference closed form for the conic family,
/// `(d-1) d (d+1) (d^7 + 25d^6 + 231d^5 + 795d^4 + 1856d^3 + 2468d^2 + 2256d + 768) / 3840`.
pub fn conic_closed_formula() -> UniPoly {
    let septic = UniPoly::from_integers(&[768, 2256, 2468, 1856, 795, 231, 25, 1]);
    let roots = [-1i64, 0, 1]
        .iter()
        .fold(UniPoly::from_integers(&[1]), |acc, &r| {
            acc.mul(&UniPoly::linear_root(&Fraction::from(r)))
        });
    // 1 / (2^5 * 5!)
    let scale = Fraction::new(BigInt::from(1), BigInt::from(32 * 120)).expect("nonzero");
    roots.mul(&septic).scale(&scale)
}
