//! Layer-by-layer ideal matching under twists t ↦ t^v: the finite-level
//! shadow of comparing principal ideals in the completed group ring.
//!
//! Run with: cargo run --example profinite_match

use alexlab::bigpoly::IntPoly;
use alexlab::cyclores::profinite_ideal_match;

fn print_report(label: &str, rep: &alexlab::TwistMatchReport) {
    println!("{label}");
    for (level, twists) in &rep.candidates {
        println!("  V_{level} = {twists:?}");
    }
    match rep.witness_empty_level {
        Some(n) => println!("  no twist works at level {n}; verdict: incompatible"),
        None => println!(
            "  compatible twist family among tested levels: {}",
            if rep.compatible { "yes" } else { "no" }
        ),
    }
    println!();
}

fn main() {
    let levels: Vec<u64> = vec![1, 2, 3, 4, 6, 12];
    let fig8: IntPoly = "t^2 - 3t + 1".parse().unwrap();
    let trefoil: IntPoly = "t^2 - t + 1".parse().unwrap();

    let rep = profinite_ideal_match(&fig8, &fig8, &levels, 0).unwrap();
    print_report("figure-eight against itself (reciprocal, so v = ±1 both work):", &rep);

    // a unit multiple generates the same ideals at every level
    let shifted = fig8.shifted(3);
    let rep = profinite_ideal_match(&fig8, &shifted, &levels, 0).unwrap();
    print_report("figure-eight against t³·Δ (unit multiple):", &rep);

    let rep = profinite_ideal_match(&trefoil, &fig8, &levels, 0).unwrap();
    print_report("trefoil against figure-eight:", &rep);
}
