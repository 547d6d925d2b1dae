//! Recover the conic degree as a polynomial in `d` from Bott samples, then
//! factor out its small integer roots.
//!
//! cargo run --example recover_formula -- /tmp/samples.json

use foliation_degrees::bott::conic_closed_formula;
use foliation_degrees::interpolate::{
    extract_small_roots, sample_and_interpolate, FitStatus, SampleCache, SampleFamily,
};
use foliation_degrees::weights::WeightVector;

fn main() {
    let mut cache = match std::env::args().nth(1) {
        Some(path) => {
            let (cache, warning) = SampleCache::open(path);
            if let Some(warning) = warning {
                eprintln!("warning: {warning}");
            }
            cache
        }
        None => SampleCache::in_memory(),
    };
    let w = WeightVector::default_conic();

    for d_max in [12, 17] {
        let (fit, run) = sample_and_interpolate(SampleFamily::Conic, 2, d_max, &w, &mut cache).unwrap();
        println!("d = 2..{d_max}: {} computed, {} cached", run.computed, run.cached);
        match fit.status {
            FitStatus::Confirmed { prefix } => println!("  confirmed by the first {prefix} samples"),
            FitStatus::NeedsMoreSamples => println!("  needs more samples"),
        }
        println!("  {}", extract_small_roots(&fit.poly, 20).unwrap());
        println!("  closed formula agrees: {}", fit.poly == conic_closed_formula());
    }

    if cache.path().is_some() {
        cache.save().unwrap();
    }
}
