//! Compute Alexander polynomials through each ingestion path: braid words,
//! Seifert matrices, and the bundled knot table.
//!
//! Run with: cargo run --example alexander_polynomials

use alexlab::knot::{
    alexander_from_braid, alexander_from_seifert, knot_table, BraidWord, KnotInput, SeifertMatrix,
};

fn main() {
    let trefoil_braid = BraidWord::parse("s1 s1 s1").unwrap();
    let from_braid = alexander_from_braid(&trefoil_braid).unwrap();
    println!("trefoil from braid  σ₁³:        Δ = {}", from_braid.delta());

    let trefoil_seifert = SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap();
    let from_seifert = alexander_from_seifert(&trefoil_seifert).unwrap();
    println!("trefoil from Seifert matrix:    Δ = {}", from_seifert.delta());
    assert_eq!(from_braid.delta(), from_seifert.delta());

    let fig8 = KnotInput::Table("4_1".into()).resolve().unwrap();
    println!("figure-eight from the table:    Δ = {}", fig8.delta());

    println!("\nthe whole bundled table:");
    for entry in knot_table() {
        let data = KnotInput::Table(entry.name.clone()).resolve().unwrap();
        println!("  {:8}  braid {:24}  Δ = {}", entry.name, entry.braid, data.delta());
    }

    // braids whose closure is a link are rejected
    let link = BraidWord::new(3, vec![1]).unwrap();
    println!("\nσ₁ on 3 strands: {}", alexander_from_braid(&link).unwrap_err());
}
