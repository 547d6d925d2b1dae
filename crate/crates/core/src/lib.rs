//! Degrees of spaces of one-dimensional holomorphic foliations on projective
//! space that leave a linear subspace, or (on the plane) a smooth conic,
//! invariant.
//!
//! Everything is computed with Bott's residue formula in exact rational
//! arithmetic:
//!
//! * [`grassmann`] localizes on the Grassmannian `G(k, n)` for invariant
//!   `k`-planes;
//! * [`conic_space`] supplies the twelve fixed points of the space of
//!   complete conics for invariant conics;
//! * [`bott`] sums the contributions and checks integrality;
//! * [`interpolate`] recovers the closed formula in `d` from samples.
//!
//! ```
//! use foliation_degrees::{bott, weights::WeightVector};
//!
//! let degree = bott::conic_degree(2, &WeightVector::default_conic()).unwrap();
//! assert_eq!(degree.to_string(), "81");
//! ```

pub mod bott;
pub mod cli;
pub mod conic_space;
pub mod exact;
pub mod grassmann;
pub mod interpolate;
pub mod serde_bigint;
pub mod space;
pub mod symfun;
pub mod weights;
