//! Chern, Segre, power-sum and elementary symmetric functions of a list of
//! integer weights.
//!
//! cargo run --example symmetric_functions -- 1 2 3 5

use foliation_degrees::exact::Fraction;
use foliation_degrees::symfun::{
    chern_from_weights, elementary_from_power_sums, elementary_top, power_sums, segre_top,
};

fn show(xs: &[Fraction]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    let mut ws: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if ws.is_empty() {
        ws = vec![1, 2, 3, 5];
    }
    let m = ws.len();

    let c = chern_from_weights(&ws, m);
    println!("weights      {ws:?}");
    println!("c_1..c_{m}     {}", show(c.values()));
    println!("c_{m}          {}", elementary_top(&ws, m));

    let p = power_sums(&ws, m);
    println!("p_1..p_{m}     {}", show(&p));
    println!("via Newton   {}", show(&elementary_from_power_sums(&p)));

    // s = 1/c as a power series
    let s = c.as_series().invert().unwrap();
    println!("s_0..s_{m}     {s}");
    println!("s_{m}          {}", segre_top(&ws, m));
}
