//! Recover a reciprocal polynomial from its absolute cyclic resultants by
//! bounded exhaustive search with progressive pruning.
//!
//! Run with: cargo run --example reconstruct

use alexlab::bigpoly::IntPoly;
use alexlab::cyclores::{reconstruct_reciprocal, CycResSeq};

fn main() {
    // forward: compute the figure-eight sequence, then invert it
    let fig8: IntPoly = "t^2 - 3t + 1".parse().unwrap();
    let seq = CycResSeq::compute(&fig8, 8).unwrap();
    let rep = reconstruct_reciprocal(&seq.abs_values(), 2, 4).unwrap();
    println!("figure-eight sequence, degree ≤ 2, height ≤ 4:");
    for c in &rep.candidates {
        println!("  candidate: {c}");
    }
    assert_eq!(rep.candidates, vec![fig8]);

    // the trefoil sequence vanishes at n = 6, which voids the uniqueness
    // hypothesis; the report says so and the candidate set is not a proof
    let trefoil: IntPoly = "t^2 - t + 1".parse().unwrap();
    let seq = CycResSeq::compute(&trefoil, 8).unwrap();
    let rep = reconstruct_reciprocal(&seq.abs_values(), 2, 2).unwrap();
    println!("\ntrefoil sequence, degree ≤ 2, height ≤ 2:");
    for c in &rep.candidates {
        println!("  candidate: {c}");
    }
    match rep.hypothesis_void_at {
        Some(n) => println!("  note: r_{n} = 0 voids the uniqueness hypothesis"),
        None => println!("  uniqueness hypothesis holds on the truncated range"),
    }
}
