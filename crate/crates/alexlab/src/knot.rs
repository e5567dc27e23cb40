//! Knot ingestion and the comparison pipeline.
//!
//! Knots enter as braid words (closure must be a knot), as Seifert
//! matrices, or by name from the bundled table. Each ingestion path
//! produces [`AlexanderData`]: the unit-normalized Alexander polynomial
//! together with a square presentation matrix of the Alexander module.
//! From there: homology of the n-fold branched cyclic cover by Smith
//! normal form, the Fox-formula order check against cyclic resultants, and
//! the end-to-end pipeline deciding whether two knots share their
//! Alexander polynomial, with layer-by-layer ideal evidence.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bigpoly::IntPoly;
use crate::cyclores::{
    self, default_fried_bound, CycError, FriedReport, TwistMatchReport,
};
use crate::linalg;
use crate::quotring::{FinAbGroup, RingElem, TruncRingCtx};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("braid syntax error: {0}")]
    SyntaxError(String),
    #[error("braid generator index {0} is out of range")]
    IndexOutOfRange(i64),
    #[error("braid closure has {0} components, not a knot")]
    NotAKnot(usize),
    #[error("matrix is not a Seifert matrix: det(V - V^T) != 1")]
    NotASeifertMatrix,
    #[error("internal divisibility failure in the Burau path")]
    InternalDivisibilityFailure,
    #[error("unknown table knot {0:?}")]
    UnknownKnot(String),
    #[error(transparent)]
    Levels(#[from] CycError),
}

/// A word in the braid group on `strands` strands; letters are signed
/// generator indices, `+i` for σᵢ and `−i` for σᵢ⁻¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<BraidWord, KnotError> {
        if strands < 2 {
            return Err(KnotError::SyntaxError("a braid needs at least 2 strands".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(KnotError::IndexOutOfRange(l as i64));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse whitespace-separated tokens `s<i>` (generator) and `S<i>`
    /// (inverse); the strand count is one more than the largest index.
    pub fn parse(text: &str) -> Result<BraidWord, KnotError> {
        let mut letters = Vec::new();
        let mut max_index = 0usize;
        for tok in text.split_whitespace() {
            let (sign, digits) = if let Some(rest) = tok.strip_prefix('s') {
                (1i32, rest)
            } else if let Some(rest) = tok.strip_prefix('S') {
                (-1i32, rest)
            } else {
                return Err(KnotError::SyntaxError(format!("bad token {tok:?}")));
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(KnotError::SyntaxError(format!("bad token {tok:?}")));
            }
            let index: usize = digits
                .parse()
                .ok()
                .filter(|i| *i <= 1000)
                .ok_or_else(|| KnotError::SyntaxError(format!("index overflow in {tok:?}")))?;
            if index < 1 {
                return Err(KnotError::IndexOutOfRange(index as i64));
            }
            max_index = max_index.max(index);
            letters.push(sign * index as i32);
        }
        if letters.is_empty() {
            return Err(KnotError::SyntaxError("empty braid word".into()));
        }
        BraidWord::new(max_index + 1, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The permutation of strand positions induced by the closure.
    pub fn closure_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Number of components of the braid closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.closure_permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = perm[at];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Markov stabilization: the same closure on one more strand.
    pub fn stabilized(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(self.strands as i32);
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Conjugation by the generator σⱼ; the closure is unchanged.
    pub fn conjugated(&self, j: i32) -> Result<BraidWord, KnotError> {
        if j == 0 || j.unsigned_abs() as usize > self.strands - 1 {
            return Err(KnotError::IndexOutOfRange(j as i64));
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(j);
        letters.extend_from_slice(&self.letters);
        letters.push(-j);
        Ok(BraidWord { strands: self.strands, letters })
    }
}

/// A Seifert matrix: a square integer matrix with `det(V − Vᵀ) = 1`,
/// possibly 0×0 for the unknot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<SeifertMatrix, KnotError> {
        let size = entries.len();
        if entries.iter().any(|row| row.len() != size) {
            return Err(KnotError::NotASeifertMatrix);
        }
        let skew: Vec<Vec<BigInt>> = (0..size)
            .map(|i| (0..size).map(|j| &entries[i][j] - &entries[j][i]).collect())
            .collect();
        if !linalg::det_bareiss(skew).is_one() {
            return Err(KnotError::NotASeifertMatrix);
        }
        Ok(SeifertMatrix { entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<SeifertMatrix, KnotError> {
        SeifertMatrix::new(
            rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }
}

/// Where an [`AlexanderData`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaSource {
    Braid,
    Seifert,
    Table,
}

impl DeltaSource {
    pub fn as_str(&self) -> &'static str {
        match self {
            DeltaSource::Braid => "braid",
            DeltaSource::Seifert => "seifert",
            DeltaSource::Table => "table",
        }
    }
}

/// Alexander polynomial in canonical unit-normal form together with a
/// square presentation matrix `Q` of the Alexander module (`det Q` equals
/// the polynomial up to a unit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderData {
    delta: IntPoly,
    presentation: Vec<Vec<IntPoly>>,
    source: DeltaSource,
}

impl AlexanderData {
    pub fn delta(&self) -> &IntPoly {
        &self.delta
    }

    pub fn presentation(&self) -> &[Vec<IntPoly>] {
        &self.presentation
    }

    pub fn source(&self) -> DeltaSource {
        self.source
    }

    pub fn presentation_det(&self) -> IntPoly {
        linalg::poly_det(self.presentation.clone())
    }
}

// Reduced Burau matrices are Laurent; we carry an integer-polynomial
// matrix together with a global power of t^{-1}.
struct ScaledPolyMatrix {
    mat: Vec<Vec<IntPoly>>,
    neg_power: usize,
}

fn poly_identity(size: usize) -> Vec<Vec<IntPoly>> {
    (0..size)
        .map(|i| (0..size).map(|j| if i == j { IntPoly::one() } else { IntPoly::zero() }).collect())
        .collect()
}

fn poly_mat_mul(a: &[Vec<IntPoly>], b: &[Vec<IntPoly>]) -> Vec<Vec<IntPoly>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = IntPoly::zero();
                    for k in 0..n {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn burau_letter(letter: i32, strands: usize) -> ScaledPolyMatrix {
    let size = strands - 1;
    let i = letter.unsigned_abs() as usize - 1; // 0-based row of the touched generator
    let t = IntPoly::variable();
    if letter > 0 {
        let mut mat = poly_identity(size);
        if i > 0 {
            mat[i][i - 1] = t.clone();
        }
        mat[i][i] = -&t;
        if i + 1 < size {
            mat[i][i + 1] = IntPoly::one();
        }
        ScaledPolyMatrix { mat, neg_power: 0 }
    } else {
        // t · σᵢ⁻¹ has integer entries; account for the factor afterwards
        let mut mat: Vec<Vec<IntPoly>> = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| if r == c { t.clone() } else { IntPoly::zero() })
                    .collect()
            })
            .collect();
        if i > 0 {
            mat[i][i - 1] = t.clone();
        }
        mat[i][i] = IntPoly::constant(-1);
        if i + 1 < size {
            mat[i][i + 1] = IntPoly::one();
        }
        ScaledPolyMatrix { mat, neg_power: 1 }
    }
}

fn reduced_burau(b: &BraidWord) -> ScaledPolyMatrix {
    let size = b.strands - 1;
    let mut acc = ScaledPolyMatrix { mat: poly_identity(size), neg_power: 0 };
    for &letter in &b.letters {
        let step = burau_letter(letter, b.strands);
        acc = ScaledPolyMatrix {
            mat: poly_mat_mul(&acc.mat, &step.mat),
            neg_power: acc.neg_power + step.neg_power,
        };
    }
    acc
}

/// Alexander polynomial from the reduced Burau representation of a braid
/// whose closure is a knot: `det(ρ̄(b) − I)` divided exactly by
/// `1 + t + … + t^{k−1}`, then unit-normalized.
///
/// This path carries only polynomial-level data, so the presentation
/// matrix recorded here is the 1×1 matrix `[Δ]` (the cyclic presentation
/// with the same Fitting ideal). Branched-cover homology computed from it
/// has the correct order at every level; for the full group structure of a
/// knot whose Alexander module is not cyclic, ingest a Seifert matrix
/// instead.
pub fn alexander_from_braid(b: &BraidWord) -> Result<AlexanderData, KnotError> {
    let components = b.closure_components();
    if components != 1 {
        return Err(KnotError::NotAKnot(components));
    }
    let burau = reduced_burau(b);
    // det(t^{-S}·M − I) = t^{-S·(k−1)} · det(M − t^S·I); the t-power is a
    // unit and disappears in normalization
    let t_pow = IntPoly::monomial(1, burau.neg_power);
    let mut shifted = burau.mat;
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] = &row[i] - &t_pow;
    }
    let det = linalg::poly_det(shifted);
    let norm: IntPoly = IntPoly::from_coeffs(vec![BigInt::one(); b.strands]);
    let quotient = det.exact_div(&norm).map_err(|_| KnotError::InternalDivisibilityFailure)?;
    let (delta, _) =
        quotient.normalize_unit().map_err(|_| KnotError::InternalDivisibilityFailure)?;
    Ok(AlexanderData {
        presentation: vec![vec![delta.clone()]],
        delta,
        source: DeltaSource::Braid,
    })
}

/// Alexander polynomial and presentation matrix `Q = V − tVᵀ` from a
/// Seifert matrix.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> Result<AlexanderData, KnotError> {
    let size = v.size();
    let t = IntPoly::variable();
    let q: Vec<Vec<IntPoly>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let vij = IntPoly::from_coeffs(vec![v.entries[i][j].clone()]);
                    let vji = IntPoly::from_coeffs(vec![v.entries[j][i].clone()]);
                    &vij - &(&t * &vji)
                })
                .collect()
        })
        .collect();
    let det = linalg::poly_det(q.clone());
    let (delta, _) = det.normalize_unit().map_err(|_| KnotError::NotASeifertMatrix)?;
    Ok(AlexanderData { delta, presentation: q, source: DeltaSource::Seifert })
}

/// Homology of the n-fold branched cyclic cover: each entry of the
/// presentation matrix is replaced by its n×n cyclic multiplication block
/// (row-major over the entries), and the Smith normal form of the
/// resulting integer matrix gives the group.
pub fn branched_cover_homology(data: &AlexanderData, n: u64) -> FinAbGroup {
    let q = &data.presentation;
    let qsize = q.len();
    let nn = n as usize;
    let ctx = TruncRingCtx::new(n, 0);
    let mut rows = vec![vec![BigInt::zero(); qsize * nn]; qsize * nn];
    for (bi, qrow) in q.iter().enumerate() {
        for (bj, entry) in qrow.iter().enumerate() {
            let folded = RingElem::reduce(entry, ctx);
            for r in 0..nn {
                for (c, coeff) in folded.coeffs().iter().enumerate() {
                    rows[bi * nn + r][bj * nn + (c + r) % nn] = coeff.clone();
                }
            }
        }
    }
    let (rank, factors) = linalg::quotient_invariants(rows, qsize * nn);
    FinAbGroup::new(rank, factors)
}

/// Fox's formula at one level: the order of `H₁(Mₙ)` must equal
/// `|R(Δ, tⁿ−1)|` when the resultant is nonzero, and the homology must
/// have positive rank when it vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxReport {
    pub n: u64,
    pub resultant: BigInt,
    pub group: FinAbGroup,
    pub vanishing: bool,
    pub passed: bool,
}

pub fn fox_formula_check(data: &AlexanderData, n: u64) -> FoxReport {
    let resultant = data
        .delta
        .resultant(&IntPoly::tn_minus_one(n))
        .expect("Alexander polynomial is nonzero");
    let group = branched_cover_homology(data, n);
    let vanishing = resultant.is_zero();
    let passed = if vanishing {
        group.rank() >= 1
    } else {
        group.rank() == 0 && group.order().as_ref() == Some(&resultant.abs())
    };
    FoxReport { n, resultant, group, vanishing, passed }
}

/// One bundled knot: braid word, Seifert matrix, and the pinned Alexander
/// polynomial (ascending coefficients). Braid and Seifert descriptions are
/// cross-checked against the pinned value in the test suite.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct KnotTableEntry {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub braid: String,
    pub seifert: Vec<Vec<i64>>,
    pub delta_coeffs: Vec<i64>,
}

impl KnotTableEntry {
    pub fn seifert_matrix(&self) -> SeifertMatrix {
        let rows: Vec<&[i64]> = self.seifert.iter().map(Vec::as_slice).collect();
        SeifertMatrix::from_i64(&rows).expect("table matrices are valid")
    }
}

/// The bundled knot table, parsed from `data/knot_table.json` (an array of
/// `{name, braid, seifert, delta_coeffs}` records).
pub fn knot_table() -> &'static [KnotTableEntry] {
    static TABLE: std::sync::OnceLock<Vec<KnotTableEntry>> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        serde_json::from_str(include_str!("../data/knot_table.json"))
            .expect("bundled knot table parses")
    })
}

/// Parse a knot table from a JSON string in the same record format.
pub fn parse_knot_table(json: &str) -> Result<Vec<KnotTableEntry>, serde_json::Error> {
    serde_json::from_str(json)
}

pub fn table_entry(name: &str) -> Option<&'static KnotTableEntry> {
    let wanted = name.to_ascii_lowercase();
    knot_table()
        .iter()
        .find(|e| e.name == wanted || e.aliases.iter().any(|a| *a == wanted))
}

/// One knot, however the caller wants to describe it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotInput {
    Braid(BraidWord),
    Seifert(SeifertMatrix),
    Table(String),
}

impl KnotInput {
    pub fn resolve(&self) -> Result<AlexanderData, KnotError> {
        match self {
            KnotInput::Braid(b) => alexander_from_braid(b),
            KnotInput::Seifert(v) => alexander_from_seifert(v),
            KnotInput::Table(name) => {
                let entry =
                    table_entry(name).ok_or_else(|| KnotError::UnknownKnot(name.clone()))?;
                let mut data = alexander_from_seifert(&entry.seifert_matrix())?;
                data.source = DeltaSource::Table;
                Ok(data)
            }
        }
    }
}

/// Default pipeline levels: the divisor-closed set {1, …, 12}.
pub fn default_levels() -> Vec<u64> {
    levels_up_to(12)
}

/// `{1, …, n_max}`, which is divisor-closed by construction.
pub fn levels_up_to(n_max: u64) -> Vec<u64> {
    (1..=n_max.max(1)).collect()
}

/// Full evidence report for one pair of knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub delta_j: IntPoly,
    pub delta_k: IntPoly,
    /// The decision: do the Alexander polynomials coincide up to a unit?
    pub verdict_equal: bool,
    /// Layer-by-layer twist candidates for the ideals (Δ_J(t^v)) = (Δ_K(t)).
    pub twist: TwistMatchReport,
    pub stripped_j: IntPoly,
    pub stripped_k: IntPoly,
    pub stripped: Vec<u64>,
    /// Resultant-sequence comparison of the stripped pair.
    pub fried: FriedReport,
    /// A compatible twist family exists at all tested levels exactly when
    /// the verdict is "equal". A violation would indicate a bug and is
    /// flagged here rather than silently accepted.
    pub consistent: bool,
    pub finite_level_only: bool,
}

/// Decide whether two knots share their Alexander polynomial, gathering
/// the layer-ring ideal evidence and the stripped resultant-sequence
/// comparison along the way.
pub fn theorem_pipeline(
    j: &KnotInput,
    k: &KnotInput,
    levels: &[u64],
    modulus: u64,
) -> Result<PipelineReport, KnotError> {
    let data_j = j.resolve()?;
    let data_k = k.resolve()?;
    let delta_j = data_j.delta().clone();
    let delta_k = data_k.delta().clone();
    let twist = cyclores::profinite_ideal_match(&delta_j, &delta_k, levels, modulus)?;
    let (stripped_j, stripped_k, stripped) =
        cyclores::strip_common_cyclotomic(&delta_j, &delta_k)?;
    let bound = default_fried_bound(&stripped_j, &stripped_k);
    let fried = cyclores::fried_verify(&stripped_j, &stripped_k, bound)?;
    let verdict_equal = cyclores::equal_up_to_unit(&delta_j, &delta_k)?;
    let consistent = twist.compatible == verdict_equal;
    Ok(PipelineReport {
        delta_j,
        delta_k,
        verdict_equal,
        twist,
        stripped_j,
        stripped_k,
        stripped,
        fried,
        consistent,
        finite_level_only: true,
    })
}
