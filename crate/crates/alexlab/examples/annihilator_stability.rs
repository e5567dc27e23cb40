//! Finite-level witness that integer polynomials are not zero-divisors in
//! the completed group ring: annihilator ideals at high layers push down to
//! the zero ideal, stably, at any fixed target layer.
//!
//! Run with: cargo run --example annihilator_stability

use alexlab::bigpoly::IntPoly;
use alexlab::quotring::{annihilator, stable_annihilator_image, RingElem, TruncRingCtx};

fn main() {
    let phi1: IntPoly = "t - 1".parse().unwrap();

    // at any single finite layer the annihilator is far from zero
    let ctx = TruncRingCtx::new(4, 4);
    let ann = annihilator(&RingElem::reduce(&phi1, ctx));
    println!("Ann(t - 1) in Z/4[t]/(t^4-1), lattice basis:");
    for row in ann.basis() {
        println!("  {:?}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }

    // but the images of the annihilators from higher and higher layers
    // stabilize to the zero ideal
    let target = TruncRingCtx::new(2, 2);
    let schedule: Vec<TruncRingCtx> =
        (1..=6).map(|k| TruncRingCtx::new(2 << k, 2 << k)).collect();
    println!("\ntarget layer Z/2[t]/(t^2-1), schedule: {:?}", schedule.iter().map(|c| (c.n(), c.modulus())).collect::<Vec<_>>());
    let image = stable_annihilator_image(&phi1, target, &schedule).unwrap();
    println!(
        "stable image of Ann(t - 1): {} (zero ideal: {})",
        if image.basis().is_empty() { "empty".to_string() } else { format!("{} rows", image.basis().len()) },
        image.is_zero_ideal()
    );

    let phi2: IntPoly = "t + 1".parse().unwrap();
    let image = stable_annihilator_image(&phi2, target, &schedule).unwrap();
    println!("stable image of Ann(t + 1): zero ideal: {}", image.is_zero_ideal());

    // Ann(0) is the whole ring at every layer, so its stable image is too
    let image = stable_annihilator_image(&IntPoly::zero(), target, &schedule).unwrap();
    println!("stable image of Ann(0):     unit ideal: {}", image.is_unit_ideal());
}
