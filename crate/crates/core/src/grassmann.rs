//! Foliations on `P^n` leaving a `k`-plane invariant.
//!
//! The degree is the top Chern class of `Q (x) Sym^d(T^v)` on the
//! Grassmannian `G(k, n)`, where `T` and `Q` are the tautological sub- and
//! quotient bundles. It is computed by localization at the coordinate
//! planes, which are the torus fixed points.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bott::{bott_sum_chern_top, BottError, BottReport, Family, LocalizationDatum, Parameters};
use crate::exact::{binomial, binomial_big};
use crate::space::ambient_dimension;
use crate::weights::{monomial_weights, validate_distinct_weights, WeightVector};

/// Largest ambient dimension accepted.
pub const MAX_DIMENSION: usize = 8;

/// The coordinate `k`-plane spanned by `e_s`, `s` in `span`, inside `P^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoordinatePlane {
    span: Vec<usize>,
    n: usize,
}

impl CoordinatePlane {
    pub fn span(&self) -> &[usize] {
        &self.span
    }

    pub fn k(&self) -> usize {
        self.span.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coordinates not in the span, increasing.
    pub fn complement(&self) -> Vec<usize> {
        (0..=self.n).filter(|q| !self.span.contains(q)).collect()
    }
}

impl fmt::Display for CoordinatePlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.span.iter().map(|s| format!("e{s}")).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// `0 <= k < n <= MAX_DIMENSION`
pub fn check_plane_parameters(k: usize, n: usize) -> Result<(), BottError> {
    if k >= n {
        return Err(BottError::InvalidParameters(format!("k must be < n (k = {k}, n = {n})")));
    }
    if n > MAX_DIMENSION {
        return Err(BottError::InvalidParameters(format!(
            "n must be at most {MAX_DIMENSION} (n = {n})"
        )));
    }
    Ok(())
}

/// All `C(n+1, k+1)` coordinate `k`-planes in lexicographic order.
pub fn enumerate_planes(k: usize, n: usize) -> Result<Vec<CoordinatePlane>, BottError> {
    check_plane_parameters(k, n)?;
    let mut planes = Vec::new();
    let mut span: Vec<usize> = (0..=k).collect();
    loop {
        planes.push(CoordinatePlane { span: span.clone(), n });
        // advance to the next (k+1)-subset of {0..n}
        let Some(pos) = (0..=k).rev().find(|&i| span[i] < n - k + i) else {
            break;
        };
        span[pos] += 1;
        for i in pos + 1..=k {
            span[i] = span[i - 1] + 1;
        }
    }
    Ok(planes)
}

/// Tangent weights `w_q - w_s` of `Hom(T, Q)` and fiber weights
/// `w_q - wt(mu)`, `mu` a degree-`d` monomial in the span coordinates, of
/// `Q (x) Sym^d(T^v)`.
pub fn plane_localization_datum(
    plane: &CoordinatePlane,
    d: u32,
    w: &WeightVector,
) -> Result<LocalizationDatum, BottError> {
    w.expect_len(plane.n + 1)?;
    let outside = plane.complement();
    let tangent_weights: Vec<i64> = plane
        .span
        .iter()
        .flat_map(|&s| outside.iter().map(move |&q| w[q] - w[s]))
        .collect();
    if tangent_weights.contains(&0) {
        return Err(BottError::DegenerateWeights { context: format!("zero tangent weight at {plane}") });
    }
    let monomials = monomial_weights(d, &plane.span, w, 0);
    let fiber_weights = outside
        .iter()
        .flat_map(|&q| monomials.iter().map(move |m| w[q] - m))
        .collect();
    Ok(LocalizationDatum { label: plane.to_string(), tangent_weights, fiber_weights })
}

/// `dim G(k, n) = (k+1)(n-k)`.
pub fn grassmannian_dimension(k: usize, n: usize) -> usize {
    (k + 1) * (n - k)
}

/// Degree of the locus of foliations with an invariant `k`-plane, with
/// codimension and ambient dimension attached.
pub fn plane_report(k: usize, n: usize, d: u32, w: &WeightVector) -> Result<BottReport, BottError> {
    check_plane_parameters(k, n)?;
    if d == 0 {
        return Err(BottError::InvalidParameters("d must be at least 1".into()));
    }
    w.expect_len(n + 1)?;
    if !validate_distinct_weights(w) {
        return Err(BottError::DegenerateWeights { context: format!("weights {w} are not pairwise distinct") });
    }
    let data = enumerate_planes(k, n)?
        .iter()
        .map(|plane| plane_localization_datum(plane, d, w))
        .collect::<Result<Vec<_>, _>>()?;
    let sum = bott_sum_chern_top(&data, grassmannian_dimension(k, n))?;
    Ok(BottReport {
        degree: sum.degree,
        codimension: plane_codimension(k, n, d),
        ambient_dimension: ambient_dimension(n, d),
        contributions: sum.contributions,
        weights_used: w.clone(),
        parameters: Parameters { family: Family::Plane, d, k: Some(k), n },
    })
}

pub fn plane_degree(k: usize, n: usize, d: u32, w: &WeightVector) -> Result<BigInt, BottError> {
    plane_report(k, n, d, w).map(|r| r.degree)
}

/// `C(C(d+n, n), n)`: the degree for invariant hyperplanes.
pub fn hyperplane_degree_closed(n: usize, d: u32) -> BigInt {
    let sections = binomial(d as u64 + n as u64, n as u64);
    binomial_big(&sections, n as u64)
}

/// `(n-k) (C(k+d, d) - (k+1))`.
pub fn plane_codimension(k: usize, n: usize, d: u32) -> BigInt {
    BigInt::from(n - k) * (binomial(k as u64 + d as u64, d as u64) - BigInt::from(k + 1))
}
