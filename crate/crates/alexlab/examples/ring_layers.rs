//! A tour of the layer rings Z/m[t]/(tⁿ−1): reduction, arithmetic, ideal
//! lattices with canonical HNF fingerprints, quotient groups, twists, and
//! transition maps down the inverse system.
//!
//! Run with: cargo run --example ring_layers

use alexlab::bigpoly::{cyclotomic, IntPoly};
use alexlab::quotring::{quotient_group, IdealLattice, RingElem, TruncRingCtx};

fn main() {
    let ctx = TruncRingCtx::new(3, 0);
    let t_minus_1: IntPoly = "t - 1".parse().unwrap();

    // 1 + t + t² annihilates t − 1 in Z[t]/(t³−1): a finite-level zero divisor
    let norm = RingElem::reduce(&"1 + t + t^2".parse().unwrap(), ctx);
    let gen = RingElem::reduce(&t_minus_1, ctx);
    println!("(1 + t + t²)·(t − 1) in Z[t]/(t³-1) is zero: {}", norm.mul(&gen).unwrap().is_zero());

    // ideal lattices carry a canonical HNF basis, so equality is bitwise
    let lat = IdealLattice::from_poly(&t_minus_1, ctx);
    println!("\nHNF basis of the ideal (t - 1) in Z[t]/(t³-1):");
    for row in lat.basis() {
        println!("  {:?}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    let neg = IdealLattice::from_poly(&"1 - t".parse().unwrap(), ctx);
    println!("(t - 1) == (1 - t): {}", lat.ideal_equal(&neg).unwrap());

    // quotient structure via Smith normal form
    let ctx2 = TruncRingCtx::new(2, 0);
    let fig8 = RingElem::reduce(&"t^2 - 3t + 1".parse().unwrap(), ctx2);
    let q = quotient_group(&[fig8], ctx2).unwrap();
    println!("\nZ[t]/(t²-1, t²-3t+1) ≅ {q}");

    // twists are ring automorphisms; Φ₃(t^5) generates the same ideal as Φ₃(t)
    let ctx6 = TruncRingCtx::new(6, 0);
    let phi3 = cyclotomic(3).unwrap();
    let a = IdealLattice::from_poly(&phi3, ctx6);
    let b = a.twist(5).unwrap();
    println!("\n(Φ₃(t)) == (Φ₃(t⁵)) in Z[t]/(t⁶-1): {}", a.ideal_equal(&b).unwrap());

    // transition maps push elements down the inverse system
    let top = TruncRingCtx::new(6, 0);
    let bottom = TruncRingCtx::new(3, 0);
    let e = RingElem::reduce(&"t^5 + t^4 + 1".parse().unwrap(), top);
    println!(
        "t⁵ + t⁴ + 1 at level 6 pushes down to level 3 as: {}",
        e.transition(bottom).unwrap().lift()
    );
}
