//! The projective space `P^N` of degree-`d` one-dimensional foliations on
//! `P^n`.

use num_bigint::BigInt;

use crate::exact::binomial;

/// `N = (n+1) C(d+n, n) - C(d+n-1, n) - 1`, from the Euler sequence.
pub fn ambient_dimension(n: usize, d: u32) -> BigInt {
    let (n, d) = (n as u64, d as u64);
    let sections = BigInt::from(n + 1) * binomial(d + n, n);
    let radial = if d + n >= 1 { binomial(d + n - 1, n) } else { BigInt::from(0) };
    sections - radial - 1
}
