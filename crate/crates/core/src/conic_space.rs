//! Torus fixed points of the space of complete conics `B` (the blowup of
//! `P^5` along the Veronese surface of double lines), with their tangent
//! weights and the fiber weights of the rank `d(d+2)` bundle whose top
//! Segre class gives the degree of the conic-invariant locus.
//!
//! Fixed points come in three kinds, indexed by coordinates `{0, 1, 2}`
//! with `k` always the remaining index:
//!
//! * `z_i z_j` off the exceptional divisor (3 points);
//! * `(z_i^2, z_j z_k)`: a double line with normal direction `z_j z_k` (3 points);
//! * `(z_i^2, z_j^2)`: a double line with normal direction `z_j^2` (6 points).

use std::fmt;

use serde::Serialize;

use crate::bott::{BottError, LocalizationDatum};
use crate::weights::{monomial_weights, WeightVector};

const ALL: [usize; 3] = [0, 1, 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum ConicFixedPoint {
    /// The conic `z_i z_j`, `i < j`.
    OffExceptional { i: usize, j: usize },
    /// `(z_i^2, z_j z_k)` with `{j, k}` the complement of `i`.
    ExceptionalPair { i: usize },
    /// `(z_i^2, z_j^2)`, `j != i`.
    ExceptionalDouble { i: usize, j: usize },
}

fn third(i: usize, j: usize) -> usize {
    3 - i - j
}

impl ConicFixedPoint {
    fn complement(i: usize) -> (usize, usize) {
        match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    }
}

impl fmt::Display for ConicFixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConicFixedPoint::OffExceptional { i, j } => write!(f, "z{i}*z{j}"),
            ConicFixedPoint::ExceptionalPair { i } => {
                let (j, k) = Self::complement(i);
                write!(f, "(z{i}^2; z{j}*z{k})")
            }
            ConicFixedPoint::ExceptionalDouble { i, j } => write!(f, "(z{i}^2; z{j}^2)"),
        }
    }
}

/// The twelve fixed points: off-exceptional pairs in lexicographic order,
/// then the three `(z_i^2, z_j z_k)`, then the six `(z_i^2, z_j^2)` ordered
/// by `(i, j)`.
pub fn enumerate_fixed_points() -> Vec<ConicFixedPoint> {
    let mut points = Vec::with_capacity(12);
    for i in 0..3 {
        for j in i + 1..3 {
            points.push(ConicFixedPoint::OffExceptional { i, j });
        }
    }
    points.extend((0..3).map(|i| ConicFixedPoint::ExceptionalPair { i }));
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            points.push(ConicFixedPoint::ExceptionalDouble { i, j });
        }
    }
    points
}

/// Weights of `T_p B`.
///
/// Off the exceptional divisor `B` is locally `P^5`, whose tangent space at
/// the conic `z_i z_j` has weights `wt(mu) - (w_i + w_j)` over the other five
/// quadratic monomials. On the divisor the tangent space splits as the
/// tangent to the Veronese, the tautological line `<v>` of the normal
/// direction, and `Hom(<v>, N/<v>)`.
pub fn tangent_weights(p: ConicFixedPoint, w: &WeightVector) -> Result<Vec<i64>, BottError> {
    w.expect_len(3)?;
    let weights = match p {
        ConicFixedPoint::OffExceptional { i, j } => {
            let base = w[i] + w[j];
            let mut quadrics = monomial_weights(2, &ALL, w, -base);
            let position = quadrics
                .iter()
                .position(|&x| x == 0)
                .expect("z_i z_j is a quadratic monomial");
            quadrics.remove(position);
            quadrics
        }
        ConicFixedPoint::ExceptionalPair { i } => {
            let (j, k) = ConicFixedPoint::complement(i);
            vec![
                w[j] - w[i],
                w[k] - w[i],
                w[j] - w[k],
                w[k] - w[j],
                w[j] + w[k] - 2 * w[i],
            ]
        }
        ConicFixedPoint::ExceptionalDouble { i, j } => {
            let k = third(i, j);
            vec![
                w[j] - w[i],
                w[k] - w[i],
                w[k] - w[j],
                2 * (w[k] - w[j]),
                2 * (w[j] - w[i]),
            ]
        }
    };
    if weights.contains(&0) {
        return Err(BottError::DegenerateWeights { context: format!("zero tangent weight at {p}") });
    }
    Ok(weights)
}

/// Degree-`d` monomials shifted by `-w_k`, without `z_k^d`: the fields
/// `F * d/dz_k` with `F != z_k^d`.
fn fields_along(k: usize, d: u32, w: &WeightVector) -> Vec<i64> {
    let mut out = monomial_weights(d, &ALL, w, -w[k]);
    let excluded = d as i64 * w[k] - w[k];
    let position = out
        .iter()
        .position(|&x| x == excluded)
        .expect("z_k^d is a degree-d monomial");
    out.remove(position);
    out
}

/// Weights of the bundle fiber at `p` for foliations of degree `d >= 2`,
/// `d(d+2)` values in total.
pub fn fiber_weights(p: ConicFixedPoint, d: u32, w: &WeightVector) -> Result<Vec<i64>, BottError> {
    if d < 2 {
        return Err(BottError::InvalidParameters(format!("conic family needs d >= 2, got {d}")));
    }
    w.expect_len(3)?;
    let weights = match p {
        ConicFixedPoint::OffExceptional { i, j } => {
            // F_1 (z_i d_i - z_j d_j) has the weight of F_1.
            let mut out = monomial_weights(d - 1, &ALL, w, 0);
            out.extend(fields_along(third(i, j), d, w));
            out
        }
        ConicFixedPoint::ExceptionalPair { i } => {
            let (j, k) = ConicFixedPoint::complement(i);
            let mut out = monomial_weights(d - 1, &ALL, w, w[i] - w[j]);
            out.extend(monomial_weights(d - 1, &ALL, w, w[i] - w[k]));
            out.extend(monomial_weights(d - 1, &[j, k], w, 0));
            out
        }
        ConicFixedPoint::ExceptionalDouble { i, j } => {
            let mut out = monomial_weights(d - 1, &ALL, w, w[i] - w[j]);
            out.extend(fields_along(third(i, j), d, w));
            out
        }
    };
    Ok(weights)
}

/// Localization data at all twelve fixed points.
pub fn localization_data(d: u32, w: &WeightVector) -> Result<Vec<LocalizationDatum>, BottError> {
    enumerate_fixed_points()
        .into_iter()
        .map(|p| {
            Ok(LocalizationDatum {
                label: p.to_string(),
                tangent_weights: tangent_weights(p, w)?,
                fiber_weights: fiber_weights(p, d, w)?,
            })
        })
        .collect()
}

/// One entry of the `--dump-fixed-points` listing.
#[derive(Debug, Clone, Serialize)]
pub struct FixedPointDump {
    pub label: String,
    pub point: ConicFixedPoint,
    pub tangent_weights: Vec<i64>,
    pub fiber_weights: Vec<i64>,
}

pub fn dump_fixed_points(d: u32, w: &WeightVector) -> Result<Vec<FixedPointDump>, BottError> {
    enumerate_fixed_points()
        .into_iter()
        .map(|p| {
            Ok(FixedPointDump {
                label: p.to_string(),
                point: p,
                tangent_weights: tangent_weights(p, w)?,
                fiber_weights: fiber_weights(p, d, w)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{random_valid_weights, validate_conic_weights};

    fn sorted(mut v: Vec<i64>) -> Vec<i64> {
        v.sort_unstable();
        v
    }

    fn w013() -> WeightVector {
        WeightVector::default_conic()
    }

    #[test]
    fn twelve_points() {
        let points = enumerate_fixed_points();
        assert_eq!(points.len(), 12);
        // chi(B) = chi(P^5) - chi(P^2) + chi(P(N)) with P(N) a P^2-bundle over P^2
        assert_eq!(points.len(), 6 - 3 + 3 * 3);
        let off: Vec<(usize, usize)> = points
            .iter()
            .filter_map(|p| match *p {
                ConicFixedPoint::OffExceptional { i, j } => Some((i, j)),
                _ => None,
            })
            .collect();
        assert_eq!(off, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(points[3], ConicFixedPoint::ExceptionalPair { i: 0 });
        assert_eq!(points[6], ConicFixedPoint::ExceptionalDouble { i: 0, j: 1 });
        assert_eq!(points[11], ConicFixedPoint::ExceptionalDouble { i: 2, j: 1 });
    }

    #[test]
    fn tangent_examples() {
        let w = w013();
        assert_eq!(
            tangent_weights(ConicFixedPoint::OffExceptional { i: 0, j: 1 }, &w).unwrap(),
            vec![-1, 2, 1, 3, 5]
        );
        assert_eq!(
            tangent_weights(ConicFixedPoint::ExceptionalPair { i: 0 }, &w).unwrap(),
            vec![1, 3, -2, 2, 4]
        );
        assert_eq!(
            tangent_weights(ConicFixedPoint::ExceptionalDouble { i: 0, j: 1 }, &w).unwrap(),
            vec![1, 3, 2, 4, 2]
        );
    }

    #[test]
    fn degenerate_weights_rejected() {
        let w: WeightVector = "0,0,1".parse().unwrap();
        let err = tangent_weights(ConicFixedPoint::ExceptionalPair { i: 2 }, &w).unwrap_err();
        assert!(err.is_degenerate());
    }

    #[test]
    fn fiber_examples_degree_two() {
        let w = w013();
        let off = fiber_weights(ConicFixedPoint::OffExceptional { i: 0, j: 1 }, 2, &w).unwrap();
        let mut expected = vec![0, 1, 3];
        expected.extend([-3, -2, 0, -1, 1]);
        assert_eq!(sorted(off), sorted(expected));

        let pair = fiber_weights(ConicFixedPoint::ExceptionalPair { i: 0 }, 2, &w).unwrap();
        let mut expected: Vec<i64> = [0, 1, 3].iter().map(|x| x - 1).collect();
        expected.extend([0, 1, 3].iter().map(|x| x - 3));
        expected.extend([1, 3]);
        assert_eq!(sorted(pair), sorted(expected));

        for p in enumerate_fixed_points() {
            assert_eq!(fiber_weights(p, 2, &w).unwrap().len(), 8);
        }
    }

    #[test]
    fn fiber_rank_through_degree_seventeen() {
        let w = w013();
        for d in 2..=17u32 {
            for p in enumerate_fixed_points() {
                let n = fiber_weights(p, d, &w).unwrap().len();
                assert_eq!(n, (d * (d + 2)) as usize, "{p} at d={d}");
            }
        }
        assert!(fiber_weights(ConicFixedPoint::ExceptionalPair { i: 0 }, 1, &w).is_err());
    }

    #[test]
    fn tangent_weights_nonzero_for_valid_weights() {
        for seed in 0..25 {
            let w = random_valid_weights(2, validate_conic_weights, seed).unwrap();
            for p in enumerate_fixed_points() {
                let t = tangent_weights(p, &w).unwrap();
                assert_eq!(t.len(), 5);
                assert!(!t.contains(&0));
                if let ConicFixedPoint::ExceptionalPair { .. } = p {
                    assert_eq!(t[2], -t[3]);
                }
            }
        }
    }

    #[test]
    fn pair_fiber_symmetric_under_swap() {
        // Swapping the two complementary coordinates (and their weights)
        // leaves the fiber multiset of (z_i^2, z_j z_k) unchanged.
        let w: WeightVector = "2,-5,11".parse().unwrap();
        for i in 0..3 {
            let (j, k) = ConicFixedPoint::complement(i);
            let mut perm = [0, 1, 2];
            perm.swap(j, k);
            let swapped = w.permuted(&perm);
            for d in 2..=6 {
                let a = fiber_weights(ConicFixedPoint::ExceptionalPair { i }, d, &w).unwrap();
                let b = fiber_weights(ConicFixedPoint::ExceptionalPair { i }, d, &swapped).unwrap();
                assert_eq!(sorted(a), sorted(b));
            }
        }
    }

    #[test]
    fn off_exceptional_union_is_permutation_invariant() {
        let w: WeightVector = "4,-1,10".parse().unwrap();
        assert!(crate::weights::validate_conic_weights(&w));
        let union = |w: &WeightVector, d: u32| {
            let mut all = Vec::new();
            for p in enumerate_fixed_points().into_iter().take(3) {
                all.extend(fiber_weights(p, d, w).unwrap());
                all.extend(tangent_weights(p, w).unwrap());
            }
            sorted(all)
        };
        for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]] {
            let permuted = w.permuted(&perm);
            for d in 2..=5 {
                assert_eq!(union(&w, d), union(&permuted, d));
            }
        }
    }
}
