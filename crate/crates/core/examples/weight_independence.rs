//! The Bott sum is the same integer for every generic weight vector even
//! though the individual residues change.
//!
//! cargo run --example weight_independence

use foliation_degrees::bott::conic_report;
use foliation_degrees::grassmann::plane_report;
use foliation_degrees::weights::{random_valid_weights, validate_conic_weights, validate_distinct_weights};

fn main() {
    let d = 4;
    println!("invariant conic, d = {d}");
    for seed in 0..5 {
        let w = random_valid_weights(2, validate_conic_weights, seed).unwrap();
        let r = conic_report(d, &w).unwrap();
        println!("  weights {:<16} first residue {:<28} degree {}", w.to_string(), r.contributions[0].contribution.to_string(), r.degree);
    }

    println!("invariant line in P^3, d = {d}");
    for seed in 0..5 {
        let w = random_valid_weights(3, validate_distinct_weights, seed).unwrap();
        let r = plane_report(1, 3, d, &w).unwrap();
        println!("  weights {:<16} first residue {:<28} degree {}", w.to_string(), r.contributions[0].contribution.to_string(), r.degree);
    }
}
