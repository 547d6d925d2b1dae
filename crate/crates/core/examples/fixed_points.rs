//! The twelve torus-fixed complete conics, their tangent weights, and each
//! one's share of the degree.
//!
//! cargo run --example fixed_points -- 3 2,-5,11

use foliation_degrees::bott::conic_report;
use foliation_degrees::conic_space::dump_fixed_points;
use foliation_degrees::weights::WeightVector;

fn main() {
    let mut args = std::env::args().skip(1);
    let d: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let w: WeightVector = match args.next() {
        Some(s) => s.parse().expect("weights like 0,1,3"),
        None => WeightVector::default_conic(),
    };

    let points = dump_fixed_points(d, &w).unwrap();
    let report = conic_report(d, &w).unwrap();
    for (p, c) in points.iter().zip(&report.contributions) {
        println!("{:<16} tangent {:?}", p.label, p.tangent_weights);
        println!("{:<16} contribution {}", "", c.contribution);
    }
    println!("sum = {}", report.degree);
}
