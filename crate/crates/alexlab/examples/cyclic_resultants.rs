//! Cyclic resultant sequences and the Weber order check.
//!
//! Run with: cargo run --example cyclic_resultants

use alexlab::bigpoly::IntPoly;
use alexlab::cyclores::{weber_check, CycResSeq};

fn main() {
    let fig8: IntPoly = "t^2 - 3t + 1".parse().unwrap();
    let seq = CycResSeq::compute(&fig8, 10).unwrap();
    println!("f = {fig8}");
    println!("|r_n| for n = 1..10: {:?}", seq.abs_values().iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let trefoil: IntPoly = "t^2 - t + 1".parse().unwrap();
    let seq = CycResSeq::compute(&trefoil, 12).unwrap();
    println!("\nf = {trefoil} (divisible by Φ₆, so r_n = 0 whenever 6 | n)");
    println!("|r_n| for n = 1..12: {:?}", seq.abs_values().iter().map(|v| v.to_string()).collect::<Vec<_>>());

    println!("\nWeber check: the quotient Z[t]/(f, tⁿ−1) is finite of order |r_n|");
    for n in [2u64, 5, 6] {
        let rep = weber_check(&trefoil, n).unwrap();
        if rep.vanishing {
            println!(
                "  n = {n}: r_n = 0, quotient has free rank {} (infinite) — {}",
                rep.group.rank(),
                if rep.passed { "pass" } else { "FAIL" }
            );
        } else {
            println!(
                "  n = {n}: |r_n| = {}, quotient {} — {}",
                rep.resultant.magnitude(),
                rep.group,
                if rep.passed { "pass" } else { "FAIL" }
            );
        }
    }
}
