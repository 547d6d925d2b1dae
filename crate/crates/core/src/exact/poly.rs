use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Fraction;

/// Univariate polynomial in `d` with rational coefficients, constant term
/// first. Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Fraction>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fraction) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Fraction>) -> Self {
        while coeffs.last().is_some_and(Fraction::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Fraction::from(c)).collect())
    }

    /// `d - root`
    pub fn linear_root(root: &Fraction) -> Self {
        UniPoly { coeffs: vec![-root, Fraction::one()] }
    }

    pub fn coeffs(&self) -> &[Fraction] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Fraction> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Fraction) -> Fraction {
        self.coeffs
            .iter()
            .rev()
            .fold(Fraction::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Fraction::zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&Fraction::from(-1)))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Fraction::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Fraction) -> UniPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Synthetic division by `d - root`: returns `(quotient, remainder)`.
    pub fn div_linear(&self, root: &Fraction) -> (UniPoly, Fraction) {
        if self.is_zero() {
            return (UniPoly::zero(), Fraction::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![Fraction::zero(); n - 1];
        let mut carry = Fraction::zero();
        for i in (0..n).rev() {
            let value = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return (Self::from_coeffs(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }
}

impl fmt::Display for UniPoly {
    /// Descending powers of `d`, e.g. `1/2*d^2 - d + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = magnitude == Fraction::one();
            match (i, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "d")?,
                (1, false) => write!(f, "{magnitude}*d")?,
                (_, true) => write!(f, "d^{i}")?,
                (_, false) => write!(f, "{magnitude}*d^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Fraction>::deserialize(deserializer)?;
        if coeffs.last().is_some_and(Fraction::is_zero) {
            return Err(serde::de::Error::custom("trailing zero coefficient"));
        }
        Ok(UniPoly { coeffs })
    }
}
