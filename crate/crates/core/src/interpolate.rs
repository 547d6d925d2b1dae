//! Recovering a degree formula in `d` from exact samples.
//!
//! [`lagrange`] interpolates through growing prefixes of the samples and
//! stops at the first interpolant that reproduces every sample. If only the
//! full-size interpolant fits, there was no spare sample to confirm it, and
//! the result is reported as [`FitStatus::NeedsMoreSamples`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bott::{conic_degree, BottError};
use crate::exact::{Fraction, UniPoly};
use crate::grassmann::plane_degree;
use crate::weights::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpolationError {
    #[error("wrong data: sample abscissa {0} appears twice")]
    DuplicateAbscissa(i64),
    #[error("wrong data: need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("empty range d = {d_min}..{d_max}")]
    EmptyRange { d_min: u32, d_max: u32 },
    #[error(transparent)]
    Bott(#[from] BottError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FitStatus {
    /// The interpolant through the first `prefix` samples fits all of them.
    Confirmed { prefix: usize },
    /// Only the interpolant through every sample fits; its degree is
    /// `samples - 1` and nothing confirms it.
    NeedsMoreSamples,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpolation {
    pub poly: UniPoly,
    pub status: FitStatus,
}

impl Interpolation {
    pub fn is_confirmed(&self) -> bool {
        matches!(self.status, FitStatus::Confirmed { .. })
    }
}

fn interpolant(points: &[(Fraction, Fraction)]) -> UniPoly {
    let mut total = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UniPoly::constant(Fraction::one());
        let mut denom = Fraction::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul(&UniPoly::linear_root(xj));
                denom *= xi - xj;
            }
        }
        let scale = yi.checked_div(&denom).expect("abscissae are distinct");
        total = total.add(&basis.scale(&scale));
    }
    total
}

/// Interpolates through the first `j = 2, 3, ...` samples and returns the
/// first interpolant that reproduces all of them.
pub fn lagrange(samples: &[(i64, Fraction)]) -> Result<Interpolation, InterpolationError> {
    if samples.len() < 2 {
        return Err(InterpolationError::TooFewSamples(samples.len()));
    }
    let mut seen = HashSet::new();
    for (x, _) in samples {
        if !seen.insert(*x) {
            return Err(InterpolationError::DuplicateAbscissa(*x));
        }
    }
    let points: Vec<(Fraction, Fraction)> =
        samples.iter().map(|(x, y)| (Fraction::from(*x), y.clone())).collect();
    let s = points.len();
    for j in 2..=s {
        let poly = interpolant(&points[..j]);
        if points.iter().all(|(x, y)| &poly.eval(x) == y) {
            let status = if poly.degree() == Some(s - 1) {
                FitStatus::NeedsMoreSamples
            } else {
                FitStatus::Confirmed { prefix: j }
            };
            return Ok(Interpolation { poly, status });
        }
    }
    unreachable!("the interpolant through all samples fits them")
}

/// `content * prod (d - r)^m * cofactor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factored {
    pub content: Fraction,
    /// Integer roots with multiplicity, in decreasing order.
    pub roots: Vec<(i64, u32)>,
    pub cofactor: UniPoly,
}

impl Factored {
    pub fn expand(&self) -> UniPoly {
        let mut out = self.cofactor.scale(&self.content);
        for &(r, m) in &self.roots {
            for _ in 0..m {
                out = out.mul(&UniPoly::linear_root(&Fraction::from(r)));
            }
        }
        out
    }
}

impl fmt::Display for Factored {
    /// `1/3840 * (d - 1) * d * (d + 1) * (d^7 + ...)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        if self.content != Fraction::one() || (self.roots.is_empty() && self.cofactor.degree() == Some(0)) {
            factors.push(self.content.to_string());
        }
        for &(r, m) in &self.roots {
            let base = match r.cmp(&0) {
                std::cmp::Ordering::Equal => "d".to_string(),
                std::cmp::Ordering::Greater => format!("(d - {r})"),
                std::cmp::Ordering::Less => format!("(d + {})", -r),
            };
            factors.push(if m == 1 { base } else { format!("{base}^{m}") });
        }
        if self.cofactor.degree().is_some_and(|deg| deg > 0) {
            factors.push(format!("({})", self.cofactor));
        }
        write!(f, "{}", factors.join(" * "))
    }
}

fn lcm_of_denominators(p: &UniPoly) -> BigInt {
    p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()))
}

/// Divides out every integer root in `[-bound, bound]` to full multiplicity
/// and normalizes the cofactor to coprime integer coefficients with a
/// positive leading coefficient.
pub fn extract_small_roots(p: &UniPoly, bound: i64) -> Result<Factored, InterpolationError> {
    if p.is_zero() {
        return Err(InterpolationError::ZeroPolynomial);
    }
    let mut rest = p.clone();
    let mut roots = Vec::new();
    for r in (-bound..=bound).rev() {
        let root = Fraction::from(r);
        let mut multiplicity = 0;
        while rest.degree().is_some_and(|deg| deg > 0) {
            let (quotient, remainder) = rest.div_linear(&root);
            if !remainder.is_zero() {
                break;
            }
            rest = quotient;
            multiplicity += 1;
        }
        if multiplicity > 0 {
            roots.push((r, multiplicity));
        }
    }

    let lcm = lcm_of_denominators(&rest);
    let integral: Vec<BigInt> = rest
        .coeffs()
        .iter()
        .map(|c| c.numerator() * (&lcm / c.denominator()))
        .collect();
    let mut gcd = integral.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if integral.last().is_some_and(|c| c.is_negative()) {
        gcd = -gcd;
    }
    let cofactor = UniPoly::from_coeffs(
        integral.iter().map(|c| Fraction::from(c / &gcd)).collect(),
    );
    let content = Fraction::new(gcd, lcm).expect("lcm is positive");
    Ok(Factored { content, roots, cofactor })
}

/// Which degree is being sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum SampleFamily {
    Conic,
    Plane { k: usize, n: usize },
}

impl SampleFamily {
    pub fn tag(&self) -> String {
        match self {
            SampleFamily::Conic => "conic".into(),
            SampleFamily::Plane { k, n } => format!("plane-k{k}-n{n}"),
        }
    }

    pub fn degree(&self, d: u32, w: &WeightVector) -> Result<BigInt, BottError> {
        match *self {
            SampleFamily::Conic => conic_degree(d, w),
            SampleFamily::Plane { k, n } => plane_degree(k, n, d, w),
        }
    }
}

/// Cache key `family/d/w0,w1,...`.
pub fn cache_key(family: SampleFamily, d: u32, w: &WeightVector) -> String {
    format!("{}/{d}/{w}", family.tag())
}

/// Exact sample values persisted as a JSON object of decimal strings.
#[derive(Debug, Default)]
pub struct SampleCache {
    entries: BTreeMap<String, String>,
    path: Option<PathBuf>,
    dirty: bool,
}

impl SampleCache {
    pub fn in_memory() -> Self {
        SampleCache::default()
    }

    /// Opens the cache at `path`. A missing file gives an empty cache; an
    /// unreadable or corrupt one also gives an empty cache plus a warning.
    pub fn open(path: impl Into<PathBuf>) -> (Self, Option<String>) {
        let path = path.into();
        let mut cache = SampleCache { path: Some(path.clone()), ..Default::default() };
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return (cache, None),
            Err(e) => {
                return (cache, Some(format!("cannot read cache {}: {e}; recomputing", path.display())))
            }
        };
        match serde_json::from_str::<BTreeMap<String, String>>(&text) {
            Ok(entries) if entries.values().all(|v| v.parse::<BigInt>().is_ok()) => {
                cache.entries = entries;
                (cache, None)
            }
            _ => (cache, Some(format!("cache {} is corrupt; recomputing", path.display()))),
        }
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<BigInt> {
        self.entries.get(key).and_then(|v| v.parse().ok())
    }

    pub fn insert(&mut self, key: String, value: &BigInt) {
        self.entries.insert(key, value.to_string());
        self.dirty = true;
    }

    /// Writes back if anything changed and a path is set.
    pub fn save(&mut self) -> io::Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        let json = serde_json::to_string_pretty(&self.entries)?;
        fs::write(path, json + "\n")?;
        self.dirty = false;
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleRun {
    pub samples: Vec<(u32, BigInt)>,
    /// Bott sums evaluated during this run.
    pub computed: usize,
    /// Samples served from the cache.
    pub cached: usize,
}

/// Evaluates the degree at every `d` in `d_min..=d_max`, reusing and
/// filling `cache`. Uncached values are computed in parallel.
pub fn collect_samples(
    family: SampleFamily,
    d_min: u32,
    d_max: u32,
    w: &WeightVector,
    cache: &mut SampleCache,
) -> Result<SampleRun, InterpolationError> {
    if d_max < d_min {
        return Err(InterpolationError::EmptyRange { d_min, d_max });
    }
    let mut known: BTreeMap<u32, BigInt> = BTreeMap::new();
    let mut missing = Vec::new();
    for d in d_min..=d_max {
        match cache.get(&cache_key(family, d, w)) {
            Some(v) => {
                known.insert(d, v);
            }
            None => missing.push(d),
        }
    }
    let cached = known.len();
    let fresh = missing
        .par_iter()
        .map(|&d| family.degree(d, w).map(|v| (d, v)))
        .collect::<Result<Vec<_>, _>>()?;
    for (d, v) in &fresh {
        cache.insert(cache_key(family, *d, w), v);
    }
    known.extend(fresh);
    Ok(SampleRun { samples: known.into_iter().collect(), computed: missing.len(), cached })
}

/// Samples `d_min..=d_max` and interpolates.
pub fn sample_and_interpolate(
    family: SampleFamily,
    d_min: u32,
    d_max: u32,
    w: &WeightVector,
    cache: &mut SampleCache,
) -> Result<(Interpolation, SampleRun), InterpolationError> {
    let run = collect_samples(family, d_min, d_max, w, cache)?;
    let points: Vec<(i64, Fraction)> = run
        .samples
        .iter()
        .map(|(d, v)| (*d as i64, Fraction::from(v.clone())))
        .collect();
    let interpolation = lagrange(&points)?;
    Ok((interpolation, run))
}
