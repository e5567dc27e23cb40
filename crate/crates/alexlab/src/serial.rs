//! Serialized record formats for CLI and file use.
//!
//! Big integers serialize as decimal strings everywhere so no consumer can
//! lose precision; field order is fixed by declaration, which together with
//! canonical forms makes every report byte-stable across runs.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bigpoly::IntPoly;
use crate::cyclores::{
    CycResSeq, FriedReport, ReconstructReport, TwistMatchReport, WeberReport,
};
use crate::knot::{FoxReport, PipelineReport};
use crate::quotring::{FinAbGroup, IdealLattice, RingElem, TruncRingCtx};

/// Polynomial record: decimal coefficient strings in ascending degree plus
/// the lowest exponent, so Laurent shifts are representable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub coeffs: Vec<String>,
    pub lowest_deg: i64,
}

impl PolyRecord {
    pub fn from_poly(f: &IntPoly) -> PolyRecord {
        PolyRecord { coeffs: f.coeffs().iter().map(BigInt::to_string).collect(), lowest_deg: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingElemRecord {
    pub n: u64,
    pub m: u64,
    pub coeffs: Vec<String>,
}

impl RingElemRecord {
    pub fn from_elem(e: &RingElem) -> RingElemRecord {
        RingElemRecord {
            n: e.ctx().n(),
            m: e.ctx().modulus(),
            coeffs: e.coeffs().iter().map(BigInt::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRecord {
    pub n: u64,
    pub m: u64,
    pub hnf: Vec<Vec<String>>,
}

impl LatticeRecord {
    pub fn from_lattice(l: &IdealLattice) -> LatticeRecord {
        LatticeRecord {
            n: l.ctx().n(),
            m: l.ctx().modulus(),
            hnf: l
                .basis()
                .iter()
                .map(|row| row.iter().map(BigInt::to_string).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub rank: usize,
    pub invariant_factors: Vec<String>,
}

impl GroupRecord {
    pub fn from_group(g: &FinAbGroup) -> GroupRecord {
        GroupRecord {
            rank: g.rank(),
            invariant_factors: g.invariant_factors().iter().map(BigInt::to_string).collect(),
        }
    }
}

/// Cyclic-resultant sequence file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqRecord {
    #[serde(rename = "N")]
    pub n: u64,
    pub abs_values: Vec<String>,
}

impl SeqRecord {
    pub fn from_seq(seq: &CycResSeq) -> SeqRecord {
        SeqRecord {
            n: seq.max_n(),
            abs_values: seq.abs_values().iter().map(BigInt::to_string).collect(),
        }
    }

    pub fn parse_values(&self) -> Result<Vec<BigInt>, String> {
        self.abs_values
            .iter()
            .map(|s| s.parse().map_err(|_| format!("bad decimal string {s:?}")))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyReport {
    pub delta: PolyRecord,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCheckRecord {
    pub n: u64,
    pub resultant: String,
    pub group: GroupRecord,
    pub vanishing: bool,
    pub passed: bool,
}

impl OrderCheckRecord {
    pub fn from_weber(rep: &WeberReport) -> OrderCheckRecord {
        OrderCheckRecord {
            n: rep.n,
            resultant: rep.resultant.to_string(),
            group: GroupRecord::from_group(&rep.group),
            vanishing: rep.vanishing,
            passed: rep.passed,
        }
    }

    pub fn from_fox(rep: &FoxReport) -> OrderCheckRecord {
        OrderCheckRecord {
            n: rep.n,
            resultant: rep.resultant.to_string(),
            group: GroupRecord::from_group(&rep.group),
            vanishing: rep.vanishing,
            passed: rep.passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCandidatesRecord {
    pub level: u64,
    pub twists: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatViolationRecord {
    pub upper: u64,
    pub lower: u64,
    pub twist: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistMatchRecord {
    pub modulus: u64,
    pub levels: Vec<u64>,
    pub candidates: Vec<LevelCandidatesRecord>,
    pub compatible: bool,
    pub witness_empty_level: Option<u64>,
    pub compatibility_violations: Vec<CompatViolationRecord>,
    pub finite_level_only: bool,
}

impl TwistMatchRecord {
    pub fn from_report(rep: &TwistMatchReport) -> TwistMatchRecord {
        TwistMatchRecord {
            modulus: rep.modulus,
            levels: rep.levels.clone(),
            candidates: rep
                .candidates
                .iter()
                .map(|(level, twists)| LevelCandidatesRecord {
                    level: *level,
                    twists: twists.clone(),
                })
                .collect(),
            compatible: rep.compatible,
            witness_empty_level: rep.witness_empty_level,
            compatibility_violations: rep
                .compatibility_violations
                .iter()
                .map(|v| CompatViolationRecord { upper: v.upper, lower: v.lower, twist: v.v })
                .collect(),
            finite_level_only: rep.finite_level_only,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriedMismatchRecord {
    pub n: u64,
    pub lhs_abs: String,
    pub rhs_abs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriedRecord {
    pub max_n: u64,
    pub agree: bool,
    pub first_mismatch: Option<FriedMismatchRecord>,
    pub finite_level_only: bool,
}

impl FriedRecord {
    pub fn from_report(rep: &FriedReport) -> FriedRecord {
        FriedRecord {
            max_n: rep.max_n,
            agree: rep.agree,
            first_mismatch: rep.first_mismatch.as_ref().map(|m| FriedMismatchRecord {
                n: m.n,
                lhs_abs: m.lhs_abs.to_string(),
                rhs_abs: m.rhs_abs.to_string(),
            }),
            finite_level_only: rep.finite_level_only,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompareRecord {
    pub delta_j: PolyRecord,
    pub delta_k: PolyRecord,
    pub verdict: String,
    pub twist: TwistMatchRecord,
    pub stripped: Vec<u64>,
    pub stripped_j: PolyRecord,
    pub stripped_k: PolyRecord,
    pub fried: FriedRecord,
    pub consistent: bool,
    pub finite_level_only: bool,
}

impl CompareRecord {
    pub fn from_report(rep: &PipelineReport) -> CompareRecord {
        CompareRecord {
            delta_j: PolyRecord::from_poly(&rep.delta_j),
            delta_k: PolyRecord::from_poly(&rep.delta_k),
            verdict: if rep.verdict_equal { "equal" } else { "distinct" }.to_string(),
            twist: TwistMatchRecord::from_report(&rep.twist),
            stripped: rep.stripped.clone(),
            stripped_j: PolyRecord::from_poly(&rep.stripped_j),
            stripped_k: PolyRecord::from_poly(&rep.stripped_k),
            fried: FriedRecord::from_report(&rep.fried),
            consistent: rep.consistent,
            finite_level_only: rep.finite_level_only,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientWitnessRecord {
    pub level: u64,
    pub f_group: GroupRecord,
    pub g_group: GroupRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriedPairRecord {
    pub p: u64,
    pub q: u64,
    pub f: PolyRecord,
    pub g: PolyRecord,
    pub resultants: FriedRecord,
    pub quotient_witness: Option<QuotientWitnessRecord>,
    pub finite_level_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructRecord {
    pub candidates: Vec<PolyRecord>,
    pub hypothesis_void_at: Option<u64>,
    pub degree_bound: usize,
    pub height_bound: u64,
    pub finite_level_only: bool,
}

impl ReconstructRecord {
    pub fn from_report(rep: &ReconstructReport) -> ReconstructRecord {
        ReconstructRecord {
            candidates: rep.candidates.iter().map(PolyRecord::from_poly).collect(),
            hypothesis_void_at: rep.hypothesis_void_at,
            degree_bound: rep.degree_bound,
            height_bound: rep.height_bound,
            finite_level_only: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealEqualRecord {
    pub equal: bool,
    pub lhs: LatticeRecord,
    pub rhs: LatticeRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CtxRecord {
    pub n: u64,
    pub m: u64,
}

impl CtxRecord {
    pub fn from_ctx(ctx: TruncRingCtx) -> CtxRecord {
        CtxRecord { n: ctx.n(), m: ctx.modulus() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MlTestRecord {
    pub target: CtxRecord,
    pub schedule: Vec<CtxRecord>,
    pub stabilized: bool,
    pub image: Option<LatticeRecord>,
    pub image_is_zero_ideal: Option<bool>,
    pub finite_level_only: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serialization");
    out.push('\n');
    out
}
