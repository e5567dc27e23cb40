//! The end-to-end decision pipeline for two knots: Alexander polynomials,
//! layer-ring ideal matching under twists, cyclotomic stripping, and the
//! resultant-sequence comparison, with a consistency flag tying the
//! finite-level evidence to the verdict.
//!
//! Run with: cargo run --example theorem_pipeline

use alexlab::knot::{default_levels, theorem_pipeline, KnotInput};

fn show(rep: &alexlab::PipelineReport) {
    println!("  Δ_J = {}", rep.delta_j);
    println!("  Δ_K = {}", rep.delta_k);
    println!("  verdict: {}", if rep.verdict_equal { "equal" } else { "distinct" });
    println!("  stripped common cyclotomics: {:?}", rep.stripped);
    println!(
        "  fried comparison of stripped pair up to n = {}: {}",
        rep.fried.max_n,
        if rep.fried.agree { "agree" } else { "mismatch" }
    );
    println!(
        "  compatible twist family at levels {:?}: {}",
        rep.twist.levels,
        rep.twist.compatible
    );
    if let Some(n) = rep.twist.witness_empty_level {
        println!("  witness level with empty candidate set: {n}");
    }
    println!("  evidence consistent with verdict: {}\n", rep.consistent);
}

fn main() {
    let levels = default_levels();

    println!("trefoil vs figure-eight:");
    let rep = theorem_pipeline(
        &KnotInput::Table("3_1".into()),
        &KnotInput::Table("4_1".into()),
        &levels,
        0,
    )
    .unwrap();
    show(&rep);

    println!("granny vs square (distinct knots, same Alexander polynomial):");
    let rep = theorem_pipeline(
        &KnotInput::Table("granny".into()),
        &KnotInput::Table("square".into()),
        &levels,
        0,
    )
    .unwrap();
    show(&rep);
}
