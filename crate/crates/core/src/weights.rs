//! Diagonal torus actions `t . z_i = t^{w_i} z_i` on projective space and
//! the weights of monomial bases.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest admissible absolute weight. With degrees up to 64 every monomial
/// weight fits comfortably in an `i64`.
pub const WEIGHT_BOUND: i64 = 1 << 20;

/// Attempts made by [`random_valid_weights`] before giving up.
pub const RETRY_BUDGET: usize = 10_000;

/// Sampling range used by [`random_valid_weights`].
const SAMPLE_RANGE: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight {0} exceeds the bound |w| <= 2^20")]
    OutOfBound(i64),
    #[error("expected {expected} weights, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("cannot parse weights {0:?}: expected a comma-separated integer list")]
    Parse(String),
    #[error("no valid weight vector found after {0} attempts")]
    Exhausted(usize),
}

/// Integer weights `w_0..w_n` of a diagonal `C^*` action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(w: Vec<i64>) -> Result<Self, WeightError> {
        if let Some(&bad) = w.iter().find(|x| x.abs() > WEIGHT_BOUND) {
            return Err(WeightError::OutOfBound(bad));
        }
        Ok(WeightVector(w))
    }

    /// `(0, 1, 3)`, the weights used for the conic computation.
    pub fn default_conic() -> Self {
        WeightVector(vec![0, 1, 3])
    }

    /// `0, 1, 3, 7, 15, ...` (each entry twice the previous plus one), for
    /// `P^n`. All pairwise differences are distinct.
    pub fn default_grassmann(n: usize) -> Self {
        let mut w = Vec::with_capacity(n + 1);
        let mut x = 0i64;
        for _ in 0..=n {
            w.push(x);
            x = 2 * x + 1;
        }
        WeightVector(w)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Projective dimension `n` of the acted-on space.
    pub fn dimension(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn expect_len(&self, expected: usize) -> Result<(), WeightError> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(WeightError::WrongLength { expected, found: self.len() })
        }
    }

    /// The same weights with coordinates reordered: entry `i` of the result
    /// is `w[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        WeightVector(perm.iter().map(|&i| self.0[i]).collect())
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<i64>> for WeightVector {
    type Error = WeightError;
    fn try_from(w: Vec<i64>) -> Result<Self, Self::Error> {
        WeightVector::new(w)
    }
}

impl From<WeightVector> for Vec<i64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl FromStr for WeightVector {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| WeightError::Parse(s.to_string()))?;
        WeightVector::new(w)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// True iff `w` has three entries and the six sums `w_i + w_j`, `i <= j`,
/// are pairwise distinct.
pub fn validate_conic_weights(w: &WeightVector) -> bool {
    if w.len() != 3 {
        return false;
    }
    let mut seen = HashSet::new();
    for i in 0..3 {
        for j in i..3 {
            if !seen.insert(w[i] + w[j]) {
                return false;
            }
        }
    }
    true
}

/// True iff all entries are pairwise distinct.
pub fn validate_distinct_weights(w: &WeightVector) -> bool {
    let mut seen = HashSet::new();
    w.as_slice().iter().all(|x| seen.insert(*x))
}

/// Weights `sum a_i w_i + shift` of the degree-`e` monomials `z^a` in the
/// variables `vars`. Exponent vectors are visited in decreasing
/// lexicographic order, so for `vars = [1, 2]`, `e = 2` the monomials come
/// out as `z1^2, z1 z2, z2^2`.
pub fn monomial_weights(e: u32, vars: &[usize], w: &WeightVector, shift: i64) -> Vec<i64> {
    fn walk(e: u32, vars: &[usize], w: &WeightVector, acc: i64, out: &mut Vec<i64>) {
        match vars {
            [] => {
                if e == 0 {
                    out.push(acc);
                }
            }
            [last] => out.push(acc + e as i64 * w[*last]),
            [first, rest @ ..] => {
                for a in (0..=e).rev() {
                    walk(e - a, rest, w, acc + a as i64 * w[*first], out);
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(e, vars, w, shift, &mut out);
    out
}

/// Seeded rejection sampling of weights for `P^n` accepted by `validator`.
/// The same seed always yields the same vector.
pub fn random_valid_weights<F>(n: usize, validator: F, seed: u64) -> Result<WeightVector, WeightError>
where
    F: Fn(&WeightVector) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let w = WeightVector(
            (0..=n)
                .map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))
                .collect(),
        );
        if validator(&w) {
            return Ok(w);
        }
    }
    Err(WeightError::Exhausted(RETRY_BUDGET))
}
