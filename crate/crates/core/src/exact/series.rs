use std::fmt;

use super::{ExactError, Fraction};

/// A power series in `t` truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Fraction>,
}

impl TruncatedSeries {
    /// The series `1` at the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Fraction::zero(); order + 1];
        coeffs[0] = Fraction::one();
        TruncatedSeries { coeffs }
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Fraction>) -> Self {
        let mut v: Vec<Fraction> = coeffs.into_iter().take(order + 1).collect();
        v.resize(order + 1, Fraction::zero());
        TruncatedSeries { coeffs: v }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &Fraction {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Fraction] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fraction> {
        self.coeffs
    }

    /// Multiplies in place by `1 + w t`.
    pub fn mul_linear_assign(&mut self, w: &Fraction) {
        if w.is_zero() {
            return;
        }
        for i in (1..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if !lo[i - 1].is_zero() {
                hi[0] += &lo[i - 1] * w;
            }
        }
    }

    pub fn mul_linear(&self, w: &Fraction) -> Self {
        let mut out = self.clone();
        out.mul_linear_assign(w);
        out
    }

    /// Truncated product; both factors must share the same order.
    pub fn mul(&self, other: &TruncatedSeries) -> Self {
        assert_eq!(self.order(), other.order(), "series orders differ");
        let m = self.order();
        let mut out = vec![Fraction::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// The multiplicative inverse, via `s_i = -sum_{j=1..i} c_j s_{i-j}`.
    /// Requires a unit constant term.
    pub fn invert(&self) -> Result<Self, ExactError> {
        if self.coeffs[0] != Fraction::one() {
            return Err(ExactError::NonUnitConstantTerm(self.coeffs[0].clone()));
        }
        let m = self.order();
        let mut s: Vec<Fraction> = Vec::with_capacity(m + 1);
        s.push(Fraction::one());
        for i in 1..=m {
            let acc: Fraction = (1..=i).map(|j| &self.coeffs[j] * &s[i - j]).sum();
            s.push(-acc);
        }
        Ok(TruncatedSeries { coeffs: s })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Fraction> {
        v.iter().map(|&x| Fraction::from(x)).collect()
    }

    #[test]
    fn linear_multiplication() {
        let s = TruncatedSeries::one(3).mul_linear(&Fraction::from(2));
        assert_eq!(s.coeffs(), ints(&[1, 2, 0, 0]).as_slice());

        let s = TruncatedSeries::from_coeffs(1, ints(&[1, 1])).mul_linear(&Fraction::from(2));
        assert_eq!(s.coeffs(), ints(&[1, 3]).as_slice());

        let s = TruncatedSeries::one(3)
            .mul_linear(&Fraction::from(1))
            .mul_linear(&Fraction::from(2));
        assert_eq!(s.coeffs(), ints(&[1, 3, 2, 0]).as_slice());
    }

    #[test]
    fn inverse_of_cyclotomic_factor() {
        let c = TruncatedSeries::from_coeffs(5, ints(&[1, 1, 1]));
        let s = c.invert().unwrap();
        assert_eq!(s.coeffs(), ints(&[1, -1, 0, 1, -1, 0]).as_slice());
        assert_eq!(c.mul(&s), TruncatedSeries::one(5));
    }

    #[test]
    fn inverse_of_one_and_geometric_series() {
        assert_eq!(TruncatedSeries::one(4).invert().unwrap(), TruncatedSeries::one(4));

        let c1: Fraction = "7/2".parse().unwrap();
        let s = TruncatedSeries::one(2).mul_linear(&c1).invert().unwrap();
        assert_eq!(s.coeff(1), &-&c1);
        assert_eq!(s.coeff(2), &(&c1 * &c1));
    }

    #[test]
    fn inverse_requires_unit_constant() {
        let c = TruncatedSeries::from_coeffs(2, ints(&[2, 1]));
        assert!(matches!(c.invert(), Err(ExactError::NonUnitConstantTerm(_))));
    }
}
