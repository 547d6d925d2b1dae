//! Degrees of the locus of degree-`d` foliations on `P^2` with an invariant
//! conic, next to the closed formula.
//!
//! cargo run --example conic_degrees -- 12

use foliation_degrees::bott::{conic_closed_formula, conic_report};
use foliation_degrees::exact::Fraction;
use foliation_degrees::weights::WeightVector;

fn main() {
    let d_max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let w = WeightVector::default_conic();
    let formula = conic_closed_formula();

    println!("{:>3}  {:>6}  {:>40}", "d", "codim", "degree");
    for d in 2..=d_max {
        let report = conic_report(d, &w).expect("default weights are generic");
        let closed = formula.eval(&Fraction::from(d as i64));
        assert_eq!(Fraction::from(report.degree.clone()), closed);
        println!("{d:>3}  {:>6}  {:>40}", report.codimension, report.degree);
    }
}
