//! Degrees for foliations on `P^n` with an invariant `k`-plane, over a small
//! table of `(k, n)`.
//!
//! cargo run --example invariant_planes

use foliation_degrees::grassmann::{hyperplane_degree_closed, plane_report};
use foliation_degrees::weights::WeightVector;

fn main() {
    for (k, n) in [(0, 2), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4)] {
        let w = WeightVector::default_grassmann(n);
        println!("k = {k}, n = {n}  (weights {w})");
        for d in 1..=4 {
            let r = plane_report(k, n, d, &w).unwrap();
            print!("  d = {d}: degree {}  codim {}  N {}", r.degree, r.codimension, r.ambient_dimension);
            if k + 1 == n {
                assert_eq!(r.degree, hyperplane_degree_closed(n, d));
                print!("  = C(C(d+n,n),n)");
            }
            println!();
        }
    }
}
