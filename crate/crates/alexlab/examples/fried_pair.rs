//! Fried's pair: two distinct products of cyclotomics with identical
//! absolute cyclic resultants at every level. The resultant sequence alone
//! cannot tell them apart, but the quotient-group structures of the layer
//! rings can.
//!
//! Run with: cargo run --example fried_pair

use alexlab::cyclores::{fried_pair, fried_verify, quotient_distinguisher};

fn main() {
    let (f, g) = fried_pair(2, 3);
    println!("F = {f}");
    println!("G = {g}");

    let rep = fried_verify(&f, &g, 60).unwrap();
    println!(
        "\n|r_n(F)| = |r_n(G)| for all n ≤ {}: {}",
        rep.max_n,
        if rep.agree { "yes (evidence, not proof)" } else { "NO" }
    );

    match quotient_distinguisher(&f, &g, 36) {
        Some((level, qf, qg)) => {
            println!("\nquotient structures first differ at level n = {level}:");
            println!("  Z[t]/(F, t^{level}-1) ≅ {qf}");
            println!("  Z[t]/(G, t^{level}-1) ≅ {qg}");
        }
        None => println!("\nno quotient difference found up to level 36"),
    }
}
