//! Exact computation around Alexander polynomials of knots, cyclic
//! resultants, and the homology of branched cyclic covers.
//!
//! Everything is computed over the integers (arbitrary precision) with
//! deterministic canonical forms: polynomials are unit-normalized in the
//! Laurent ring `Z[t^Z]`, ideals of the layer rings `Z/m[t]/(tⁿ−1)` are
//! fingerprinted by canonical Hermite normal form, and abelian groups are
//! reported as free rank plus invariant factors via Smith normal form.
//!
//! The main entry points:
//!
//! * [`bigpoly`] — integer polynomials, resultants, cyclotomic polynomials,
//!   unit normalization in `Z[t^Z]`.
//! * [`quotring`] — the layer rings, ideal lattices, quotient groups,
//!   annihilators, twists `t ↦ t^v`, transition maps, and the stabilized
//!   annihilator image along an ascending schedule of layers.
//! * [`cyclores`] — cyclic resultant sequences, the Weber/Fox order check,
//!   cyclotomic stripping, bounded reconstruction of reciprocal polynomials
//!   from resultant sequences, and layer-by-layer ideal matching under
//!   twists.
//! * [`knot`] — braid words, Seifert matrices, the bundled knot table,
//!   Alexander polynomials, branched-cover homology, and the end-to-end
//!   comparison pipeline for two knots.
//! * [`cli`] — the `alexlab` command-line front end with deterministic
//!   JSON reports.
//!
//! See the crate examples for a runnable tour of each capability.
//!
//! ```
//! use alexlab::{alexander_from_braid, branched_cover_homology, BraidWord};
//!
//! let trefoil = BraidWord::parse("s1 s1 s1")?;
//! let data = alexander_from_braid(&trefoil)?;
//! assert_eq!(data.delta().to_string(), "t^2 - t + 1");
//!
//! // H₁ of the 3-fold branched cyclic cover
//! let h3 = branched_cover_homology(&data, 3);
//! assert_eq!(h3.to_string(), "Z/2 + Z/2");
//! # Ok::<(), alexlab::KnotError>(())
//! ```

#![allow(clippy::manual_is_multiple_of)]

pub(crate) mod arith;
pub mod bigpoly;
pub mod cli;
pub mod cyclores;
pub mod knot;
pub(crate) mod linalg;
pub mod quotring;
pub mod serial;

pub use bigpoly::{cyclotomic, IntPoly, LaurentUnit, PolyError};
pub use cyclores::{
    cyclic_resultant, equal_up_to_unit, fried_pair, fried_verify, profinite_ideal_match,
    quotient_distinguisher, reconstruct_reciprocal, strip_common_cyclotomic, weber_check,
    CycError, CycResSeq, FriedReport, ReconstructReport, TwistMatchReport, WeberReport,
};
pub use knot::{
    knot_table, parse_knot_table, table_entry, KnotTableEntry,
    alexander_from_braid, alexander_from_seifert, branched_cover_homology, fox_formula_check,
    theorem_pipeline, AlexanderData, BraidWord, FoxReport, KnotError, KnotInput, PipelineReport,
    SeifertMatrix,
};
pub use quotring::{
    annihilator, quotient_group, stable_annihilator_image, FinAbGroup, IdealLattice, RingElem,
    RingError, TruncRingCtx,
};
