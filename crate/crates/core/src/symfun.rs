//! Symmetric functions of weight multisets: equivariant Chern and Segre
//! classes, power sums and Newton's identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{Fraction, TruncatedSeries};

/// Total Chern class `prod (1 + xi t)` of a weight multiset, truncated at
/// `t^order`. `c(0)` is always 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector {
    series: TruncatedSeries,
}

impl ChernVector {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// `c_i`, zero past the order.
    pub fn c(&self, i: usize) -> Fraction {
        if i <= self.order() {
            self.series.coeff(i).clone()
        } else {
            Fraction::zero()
        }
    }

    /// `c_1..c_m`.
    pub fn values(&self) -> &[Fraction] {
        &self.series.coeffs()[1..]
    }

    pub fn as_series(&self) -> &TruncatedSeries {
        &self.series
    }
}

/// Accumulates `prod (1 + xi t)` one linear factor at a time, so the cost is
/// `|ws| * order` rather than an enumeration of subsets.
/// Integer weights give integer coefficients, so the product is accumulated
/// over `BigInt` and converted once at the end.
pub fn chern_from_weights(ws: &[i64], order: usize) -> ChernVector {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for (used, &xi) in ws.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        let xi = BigInt::from(xi);
        for i in (1..=order.min(used + 1)).rev() {
            let term = &c[i - 1] * &xi;
            c[i] += term;
        }
    }
    ChernVector {
        series: TruncatedSeries::from_coeffs(order, c.into_iter().map(Fraction::from)),
    }
}

/// Coefficient of `t^order` in `1 / prod (1 + xi t)`, i.e. the top Segre
/// class with the convention `s(t) c(t) = 1`.
pub fn segre_top(ws: &[i64], order: usize) -> Fraction {
    let chern = chern_from_weights(ws, order);
    chern
        .series
        .invert()
        .expect("Chern series has constant term 1")
        .coeff(order)
        .clone()
}

/// The elementary symmetric function `e_g(ws)`; zero when `g > |ws|`.
pub fn elementary_top(ws: &[i64], g: usize) -> Fraction {
    if g > ws.len() {
        return Fraction::zero();
    }
    chern_from_weights(ws, g).c(g)
}

/// Power sums `p_1..p_kmax` of a weight multiset.
pub fn power_sums(ws: &[i64], kmax: usize) -> Vec<Fraction> {
    let mut sums = vec![Fraction::zero(); kmax];
    for &xi in ws {
        let xi = Fraction::from(xi);
        let mut pow = xi.clone();
        for s in sums.iter_mut() {
            *s += &pow;
            pow = &pow * &xi;
        }
    }
    sums
}

/// Recovers `e_1..e_k` from `p_1..p_k` through Newton's identities
/// `k e_k = sum_{i=1..k} (-1)^{i+1} e_{k-i} p_i`.
pub fn elementary_from_power_sums(p: &[Fraction]) -> Vec<Fraction> {
    let mut e = vec![Fraction::one()];
    for k in 1..=p.len() {
        let mut acc = Fraction::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let e_k = acc
            .checked_div(&Fraction::from(k as i64))
            .expect("k >= 1");
        e.push(e_k);
    }
    e.remove(0);
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Fraction> {
        v.iter().map(|&x| Fraction::from(x)).collect()
    }

    #[test]
    fn chern_examples() {
        assert_eq!(chern_from_weights(&[1, 2, 3], 3).values(), ints(&[6, 11, 6]).as_slice());
        assert_eq!(chern_from_weights(&[], 5).values(), ints(&[0; 5]).as_slice());
        assert_eq!(chern_from_weights(&[5], 2).values(), ints(&[5, 0]).as_slice());
        assert_eq!(chern_from_weights(&[1, 2], 3).c(3), Fraction::zero());
        assert_eq!(chern_from_weights(&[1, 2], 3).c(9), Fraction::zero());
    }

    #[test]
    fn segre_examples() {
        assert_eq!(segre_top(&[4], 1), Fraction::from(-4));
        assert_eq!(segre_top(&[1, 1, 1, 1, 1], 5), Fraction::from(-126));
        assert_eq!(segre_top(&[], 5), Fraction::zero());
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_top(&[1, 2], 1), Fraction::from(3));
        assert_eq!(elementary_top(&[1, 2], 3), Fraction::zero());
        // {w1 - w0, w2 - w0} at w = (0, 1, 3)
        assert_eq!(elementary_top(&[1, 3], 2), Fraction::from(3));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sums(&[1, 2, 3], 2)[1], Fraction::from(14));
        assert_eq!(power_sums(&[], 4), ints(&[0; 4]));
        assert_eq!(power_sums(&[-1, 1], 3)[2], Fraction::zero());
    }

    /// Inverse of `c` by long division of 1 by the degree-`order` polynomial,
    /// written independently of the series recursion.
    fn long_division_inverse(c: &[Fraction], order: usize) -> Vec<Fraction> {
        let mut remainder = vec![Fraction::zero(); order + 1];
        remainder[0] = Fraction::one();
        let mut quotient = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let q = remainder[i].clone();
            for (j, cj) in c.iter().enumerate() {
                if i + j <= order {
                    remainder[i + j] -= &q * cj;
                }
            }
            quotient.push(q);
        }
        quotient
    }

    proptest! {
        #[test]
        fn newton_identities(ws in prop::collection::vec(-30i64..30, 0..40), k in 1usize..=6) {
            let e = chern_from_weights(&ws, k);
            let p = power_sums(&ws, k);
            let recovered = elementary_from_power_sums(&p);
            prop_assert_eq!(recovered.as_slice(), e.values());
        }

        #[test]
        fn segre_matches_long_division(ws in prop::collection::vec(-20i64..20, 0..20), m in 1usize..=7) {
            let full = ws.iter().fold(UniPoly::from_integers(&[1]), |acc, &xi| {
                acc.mul(&UniPoly::from_integers(&[1, xi]))
            });
            let c = full.coeffs().to_vec();
            let expected = long_division_inverse(&c, m);
            prop_assert_eq!(segre_top(&ws, m), expected[m].clone());
        }
    }
}
