//! Cyclic resultants and what they decide.
//!
//! The n-th cyclic resultant of `f` is `R(f, tⁿ−1)`; the sequence of their
//! absolute values determines a reciprocal polynomial when none of them
//! vanish, and the layer rings of [`crate::quotring`] refine the comparison
//! when they do. Every verdict produced here is evidence over the tested
//! finite range, never a limit statement, and the reports say so through
//! their `finite_level_only` flag.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::divisors;
use crate::bigpoly::{cyclotomic, IntPoly, PolyError};
use crate::quotring::{quotient_group, FinAbGroup, IdealLattice, RingElem, TruncRingCtx};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("the resultant sequence is empty")]
    EmptySequence,
    #[error("levels must be divisor-closed: {0} is missing")]
    NonDivisorClosedLevels(u64),
}

impl From<PolyError> for CycError {
    fn from(e: PolyError) -> Self {
        debug_assert_eq!(e, PolyError::ZeroPolynomial);
        CycError::ZeroPolynomial
    }
}

/// `R(f, tⁿ−1)` under the crate's Sylvester sign convention.
pub fn cyclic_resultant(f: &IntPoly, n: u64) -> Result<BigInt, CycError> {
    Ok(f.resultant(&IntPoly::tn_minus_one(n))?)
}

/// The truncated sequence `r₁, …, r_N` of cyclic resultants of one
/// polynomial. `r_n` vanishes exactly when some `Φ_m | f` with `m | n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycResSeq {
    poly: IntPoly,
    values: Vec<BigInt>,
}

impl CycResSeq {
    pub fn compute(f: &IntPoly, max_n: u64) -> Result<CycResSeq, CycError> {
        let values = (1..=max_n)
            .map(|n| cyclic_resultant(f, n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycResSeq { poly: f.clone(), values })
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64
    }

    /// Signed values `r₁..r_N`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn abs_values(&self) -> Vec<BigInt> {
        self.values.iter().map(Signed::abs).collect()
    }
}

/// Outcome of the Weber/Fox order comparison at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeberReport {
    pub n: u64,
    pub resultant: BigInt,
    pub group: FinAbGroup,
    /// `r_n = 0`: the quotient is infinite and the order comparison is out
    /// of Weber's hypothesis; the check then requires positive rank.
    pub vanishing: bool,
    pub passed: bool,
}

/// Check `|Z[t]/(f, tⁿ−1)| = |R(f, tⁿ−1)|` by comparing the Smith normal
/// form of the ideal lattice against the resultant.
pub fn weber_check(f: &IntPoly, n: u64) -> Result<WeberReport, CycError> {
    if f.is_zero() {
        return Err(CycError::ZeroPolynomial);
    }
    let resultant = cyclic_resultant(f, n)?;
    let ctx = TruncRingCtx::new(n, 0);
    let group = quotient_group(&[RingElem::reduce(f, ctx)], ctx).expect("single ctx");
    let vanishing = resultant.is_zero();
    let passed = if vanishing {
        group.rank() >= 1
    } else {
        group.rank() == 0 && group.order().as_ref() == Some(&resultant.abs())
    };
    Ok(WeberReport { n, resultant, group, vanishing, passed })
}

/// Divide both polynomials by every common cyclotomic divisor, with
/// multiplicity, until their cyclotomic divisor sets are disjoint. Returns
/// the reduced pair and the sorted multiset of stripped indices.
pub fn strip_common_cyclotomic(
    f: &IntPoly,
    g: &IntPoly,
) -> Result<(IntPoly, IntPoly, Vec<u64>), CycError> {
    if f.is_zero() || g.is_zero() {
        return Err(CycError::ZeroPolynomial);
    }
    let mut f = f.clone();
    let mut g = g.clone();
    let mut stripped = Vec::new();
    loop {
        let div_f = f.cyclotomic_divisors()?;
        let div_g = g.cyclotomic_divisors()?;
        let common: Vec<u64> = div_f.iter().copied().filter(|m| div_g.contains(m)).collect();
        if common.is_empty() {
            break;
        }
        for m in common {
            let phi = cyclotomic(m).expect("m >= 1");
            f = f.exact_div(&phi).expect("listed divisor");
            g = g.exact_div(&phi).expect("listed divisor");
            stripped.push(m);
        }
    }
    stripped.sort_unstable();
    Ok((f, g, stripped))
}

/// True iff `f` and `g` differ by a unit `±t^k` of `Z[t^Z]`.
pub fn equal_up_to_unit(f: &IntPoly, g: &IntPoly) -> Result<bool, CycError> {
    let (cf, _) = f.normalize_unit()?;
    let (cg, _) = g.normalize_unit()?;
    Ok(cf == cg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriedMismatch {
    pub n: u64,
    pub lhs_abs: BigInt,
    pub rhs_abs: BigInt,
}

/// Comparison of two absolute cyclic-resultant sequences up to a bound.
/// Agreement is evidence for the tested range only: the underlying
/// proposition quantifies over every `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriedReport {
    pub max_n: u64,
    pub agree: bool,
    pub first_mismatch: Option<FriedMismatch>,
    pub finite_level_only: bool,
}

/// Compare `|r_n(f)|` with `|r_n(g)|` for `1 ≤ n ≤ max_n`.
pub fn fried_verify(f: &IntPoly, g: &IntPoly, max_n: u64) -> Result<FriedReport, CycError> {
    if f.is_zero() || g.is_zero() {
        return Err(CycError::ZeroPolynomial);
    }
    let mut first_mismatch = None;
    for n in 1..=max_n {
        let lhs = cyclic_resultant(f, n)?.abs();
        let rhs = cyclic_resultant(g, n)?.abs();
        if lhs != rhs {
            first_mismatch = Some(FriedMismatch { n, lhs_abs: lhs, rhs_abs: rhs });
            break;
        }
    }
    Ok(FriedReport {
        max_n,
        agree: first_mismatch.is_none(),
        first_mismatch,
        finite_level_only: true,
    })
}

/// Default truncation bound for verification reports on a pair: the
/// proposition needs the whole sequence; this bound keeps desk runs fast
/// while comfortably covering every vanishing pattern of the pair.
pub fn default_fried_bound(f: &IntPoly, g: &IntPoly) -> u64 {
    let df = f.degree().unwrap_or(0) as u64;
    let dg = g.degree().unwrap_or(0) as u64;
    4 * (df + dg) + 12
}

/// Fried's pair `F = Φ_{pq}·Φ_{p²q}·Φ_{pq²}`, `G = Φ_{p²q²}·Φ_{pq}²` for
/// distinct primes `p`, `q`: distinct polynomials with identical absolute
/// cyclic resultants at every level.
pub fn fried_pair(p: u64, q: u64) -> (IntPoly, IntPoly) {
    assert!(is_prime(p) && is_prime(q) && p != q, "p and q must be distinct primes");
    let phi = |m: u64| cyclotomic(m).expect("positive index");
    let f = &(&phi(p * q) * &phi(p * p * q)) * &phi(p * q * q);
    let g = &(&phi(p * p * q * q) * &phi(p * q)) * &phi(p * q);
    (f, g)
}

/// Find the smallest level `n ≤ max_n` at which the quotient groups
/// `Z[t]/(f, tⁿ−1)` and `Z[t]/(g, tⁿ−1)` differ in (rank, invariant
/// factors). Polynomials with identical resultant sequences can still be
/// told apart this way.
pub fn quotient_distinguisher(
    f: &IntPoly,
    g: &IntPoly,
    max_n: u64,
) -> Option<(u64, FinAbGroup, FinAbGroup)> {
    for n in 1..=max_n {
        let ctx = TruncRingCtx::new(n, 0);
        let qf = quotient_group(&[RingElem::reduce(f, ctx)], ctx).expect("single ctx");
        let qg = quotient_group(&[RingElem::reduce(g, ctx)], ctx).expect("single ctx");
        if qf != qg {
            return Some((n, qf, qg));
        }
    }
    None
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Result of the bounded reconstruction search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructReport {
    /// All canonical reciprocal polynomials within the bounds whose
    /// truncated absolute resultant sequence matches the input.
    pub candidates: Vec<IntPoly>,
    /// First index with a zero value, which voids the uniqueness
    /// hypothesis of the reconstruction proposition.
    pub hypothesis_void_at: Option<u64>,
    pub degree_bound: usize,
    pub height_bound: u64,
}

/// Enumerate all reciprocal integer polynomials of degree ≤ `d_max` with
/// coefficient magnitudes ≤ `h_max`, in canonical unit-normal form, pruning
/// progressively on `r₁, r₂, …`, and return every survivor of the full
/// sequence comparison.
pub fn reconstruct_reciprocal(
    abs_seq: &[BigInt],
    d_max: usize,
    h_max: u64,
) -> Result<ReconstructReport, CycError> {
    if abs_seq.is_empty() {
        return Err(CycError::EmptySequence);
    }
    let target: Vec<BigInt> = abs_seq.iter().map(Signed::abs).collect();
    let hypothesis_void_at = target.iter().position(Zero::is_zero).map(|i| i as u64 + 1);
    let mut candidates = enumerate_reciprocal(d_max, h_max);
    for (i, want) in target.iter().enumerate() {
        let n = i as u64 + 1;
        candidates.retain(|cand| {
            cyclic_resultant(cand, n).expect("nonzero candidate").abs() == *want
        });
        if candidates.is_empty() {
            break;
        }
    }
    Ok(ReconstructReport {
        candidates,
        hypothesis_void_at,
        degree_bound: d_max,
        height_bound: h_max,
    })
}

/// Canonical reciprocal polynomials: palindromic coefficients, degree ≤
/// `d_max`, heights ≤ `h_max`, positive leading and constant term.
/// Deterministic order: by degree, then lexicographic coefficients.
fn enumerate_reciprocal(d_max: usize, h_max: u64) -> Vec<IntPoly> {
    let h = h_max as i64;
    let mut out = Vec::new();
    for d in 0..=d_max {
        let free = d / 2 + 1; // indices 0..=d/2 determine the palindrome
        let mut stack = vec![Vec::<i64>::with_capacity(free)];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == free {
                let mut coeffs = vec![0i64; d + 1];
                for (i, &c) in prefix.iter().enumerate() {
                    coeffs[i] = c;
                    coeffs[d - i] = c;
                }
                out.push(IntPoly::from_i64_coeffs(&coeffs));
                continue;
            }
            let range: Vec<i64> = if prefix.is_empty() {
                (1..=h).collect() // leading/constant coefficient is positive
            } else {
                (-h..=h).collect()
            };
            // LIFO stack: push in reverse to emit lexicographic order
            for c in range.into_iter().rev() {
                let mut next = prefix.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }
    out
}

/// A violation of residue compatibility between candidate sets: `v` works
/// at `upper` but its residue fails at `lower`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatViolation {
    pub upper: u64,
    pub lower: u64,
    pub v: u64,
}

/// Layer-by-layer search for twists matching two principal ideals.
///
/// For each level `n`, `candidates` records the set `V_n` of units `v` of
/// `Z/n` with `(f(t^v)) = (g(t))` in the layer ring. The verdict
/// `compatible` states that a compatible family of twists exists among the
/// tested levels: every `V_n` is nonempty and residue maps send `V_{n′}`
/// into `V_n` for `n | n′`. This is finite-level evidence, not a statement
/// about the full completed ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistMatchReport {
    pub modulus: u64,
    pub levels: Vec<u64>,
    pub candidates: Vec<(u64, Vec<u64>)>,
    pub compatible: bool,
    pub witness_empty_level: Option<u64>,
    pub compatibility_violations: Vec<CompatViolation>,
    pub finite_level_only: bool,
}

impl TwistMatchReport {
    pub fn candidates_at(&self, n: u64) -> Option<&[u64]> {
        self.candidates.iter().find(|(level, _)| *level == n).map(|(_, v)| v.as_slice())
    }
}

/// Compare the principal ideals of `f` and `g` in every layer ring
/// `Z/m[t]/(tⁿ−1)` for `n` in a divisor-closed level set, searching all
/// twists `t ↦ t^v` per level and checking residue compatibility along
/// divisibility.
pub fn profinite_ideal_match(
    f: &IntPoly,
    g: &IntPoly,
    levels: &[u64],
    m: u64,
) -> Result<TwistMatchReport, CycError> {
    if f.is_zero() || g.is_zero() {
        return Err(CycError::ZeroPolynomial);
    }
    let mut levels: Vec<u64> = levels.to_vec();
    levels.sort_unstable();
    levels.dedup();
    for &n in &levels {
        for d in divisors(n) {
            if !levels.contains(&d) {
                return Err(CycError::NonDivisorClosedLevels(d));
            }
        }
    }
    let mut candidates: Vec<(u64, Vec<u64>)> = Vec::with_capacity(levels.len());
    for &n in &levels {
        let ctx = TruncRingCtx::new(n, m);
        let ideal_f = IdealLattice::from_poly(f, ctx);
        let ideal_g = IdealLattice::from_poly(g, ctx);
        let v_n: Vec<u64> = crate::arith::units_mod(n)
            .into_iter()
            .filter(|&v| {
                let twisted = ideal_f.twist(v as i64).expect("unit twist");
                twisted.ideal_equal(&ideal_g).expect("same ctx")
            })
            .collect();
        candidates.push((n, v_n));
    }
    let mut violations = Vec::new();
    for (i, (lower, v_lower)) in candidates.iter().enumerate() {
        for (upper, v_upper) in candidates.iter().skip(i + 1) {
            if upper % lower != 0 {
                continue;
            }
            for &v in v_upper {
                let mut residue = v % lower;
                if residue == 0 {
                    residue = *lower; // units are recorded in 1..=n
                }
                if !v_lower.contains(&residue) {
                    violations.push(CompatViolation { upper: *upper, lower: *lower, v });
                }
            }
        }
    }
    let witness_empty_level =
        candidates.iter().find(|(_, v)| v.is_empty()).map(|(n, _)| *n);
    let compatible = witness_empty_level.is_none() && violations.is_empty();
    Ok(TwistMatchReport {
        modulus: m,
        levels,
        candidates,
        compatible,
        witness_empty_level,
        compatibility_violations: violations,
        finite_level_only: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    // Lucas numbers: the figure-eight resultants satisfy r_n = 2 − L_{2n}.
    fn lucas(n: u64) -> BigInt {
        let (mut a, mut b) = (BigInt::from(2), BigInt::from(1));
        for _ in 0..n {
            let next = &a + &b;
            a = b;
            b = next;
        }
        a
    }

    #[test]
    fn cyclic_resultant_examples() {
        assert_eq!(cyclic_resultant(&p("t^2 - t + 1"), 6).unwrap(), big(0));
        let r2 = cyclic_resultant(&p("t^2 - 3t + 1"), 2).unwrap();
        assert_eq!(r2.abs(), big(5));
        let r5 = cyclic_resultant(&p("t^2 - 3t + 1"), 5).unwrap();
        assert_eq!(r5.abs(), big(121));
        assert_eq!(cyclic_resultant(&p("t^2 - t + 1"), 3).unwrap().abs(), big(4));
        assert_eq!(cyclic_resultant(&IntPoly::zero(), 2), Err(CycError::ZeroPolynomial));
    }

    #[test]
    fn figure_eight_matches_lucas_recurrence() {
        let f = p("t^2 - 3t + 1");
        for n in 1..=12u64 {
            let expected = big(2) - lucas(2 * n);
            assert_eq!(cyclic_resultant(&f, n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn trefoil_resultants_have_period_six() {
        let f = p("t^2 - t + 1");
        let pattern = [1i64, 3, 4, 3, 1, 0];
        for n in 1..=18u64 {
            let expected = big(pattern[(n as usize - 1) % 6]);
            assert_eq!(cyclic_resultant(&f, n).unwrap().abs(), expected, "n = {n}");
        }
    }

    #[test]
    fn sequence_vanishing_iff_cyclotomic_divisor() {
        let f = &p("t^2 - t + 1") * &p("t^2 - 3t + 1");
        let seq = CycResSeq::compute(&f, 14).unwrap();
        let divisor_orders = f.cyclotomic_divisors().unwrap();
        for (i, r) in seq.values().iter().enumerate() {
            let n = i as u64 + 1;
            let should_vanish = divisor_orders.iter().any(|m| n % m == 0);
            assert_eq!(r.is_zero(), should_vanish, "n = {n}");
        }
    }

    #[test]
    fn weber_examples() {
        let rep = weber_check(&p("t^2 - 3t + 1"), 2).unwrap();
        assert!(rep.passed && !rep.vanishing);
        assert_eq!(rep.group.order().unwrap(), big(5));
        assert_eq!(rep.resultant.abs(), big(5));

        let rep = weber_check(&p("t^2 - t + 1"), 6).unwrap();
        assert!(rep.passed && rep.vanishing);
        assert!(rep.group.rank() >= 1);

        let rep = weber_check(&p("t - 2"), 1).unwrap();
        assert!(rep.passed);
        assert!(rep.group.is_trivial());
    }

    #[test]
    fn strip_examples() {
        let f = &p("t^2 - t + 1") * &p("t^2 - 3t + 1");
        let (rf, rg, stripped) = strip_common_cyclotomic(&f, &p("t^2 - t + 1")).unwrap();
        assert_eq!(rf, p("t^2 - 3t + 1"));
        assert_eq!(rg, IntPoly::one());
        assert_eq!(stripped, vec![6]);
        // round trip
        assert_eq!(&rf * &cyclotomic(6).unwrap(), f);

        let g = p("t^2 - 3t + 1");
        let (rf, rg, stripped) = strip_common_cyclotomic(&g, &g).unwrap();
        assert_eq!((rf, rg), (g.clone(), g.clone()));
        assert!(stripped.is_empty());

        let f = &p("t - 1") * &p("t + 1");
        let g = &p("t + 1") * &p("t^2 + t + 1");
        let (rf, rg, stripped) = strip_common_cyclotomic(&f, &g).unwrap();
        assert_eq!(rf, p("t - 1"));
        assert_eq!(rg, p("t^2 + t + 1"));
        assert_eq!(stripped, vec![2]);

        // multiplicity: (t+1)² against (t+1)³ strips 2 twice
        let f = &(&p("t + 1") * &p("t + 1")) * &p("t - 1");
        let g = &(&p("t + 1") * &p("t + 1")) * &p("t + 1");
        let (rf, rg, stripped) = strip_common_cyclotomic(&f, &g).unwrap();
        assert_eq!(stripped, vec![2, 2]);
        assert_eq!(rf, p("t - 1"));
        assert_eq!(rg, p("t + 1"));
        let dis_f = rf.cyclotomic_divisors().unwrap();
        let dis_g = rg.cyclotomic_divisors().unwrap();
        assert!(dis_f.iter().all(|m| !dis_g.contains(m)));
    }

    #[test]
    fn equal_up_to_unit_examples() {
        assert!(equal_up_to_unit(&p("t^2 - 3t + 1"), &p("-t^2 + 3t - 1")).unwrap());
        assert!(equal_up_to_unit(&p("t^2 - 3t + 1"), &p("t^4 - 3t^3 + t^2")).unwrap());
        assert!(!equal_up_to_unit(&p("t^2 - t + 1"), &p("t^2 - 3t + 1")).unwrap());
    }

    #[test]
    fn fried_verify_examples() {
        let (f, g) = fried_pair(2, 3);
        assert_ne!(f, g);
        let rep = fried_verify(&f, &g, 24).unwrap();
        assert!(rep.agree, "Fried pair must agree: {:?}", rep.first_mismatch);
        assert!(rep.finite_level_only);

        let rep = fried_verify(&p("t^2 - t + 1"), &p("t^2 - 3t + 1"), 5).unwrap();
        assert!(!rep.agree);
        let mm = rep.first_mismatch.unwrap();
        assert_eq!((mm.n, mm.lhs_abs, mm.rhs_abs), (2, big(3), big(5)));

        let f = p("t^3 + 2t^2 - 1");
        let rep = fried_verify(&f, &f, 10).unwrap();
        assert!(rep.agree);
    }

    // Blunt oracle: enumerate every candidate and compare full sequences
    // through the determinant resultant path, no pruning.
    fn oracle_reconstruct(abs_seq: &[BigInt], d_max: usize, h_max: u64) -> Vec<IntPoly> {
        enumerate_reciprocal(d_max, h_max)
            .into_iter()
            .filter(|cand| {
                abs_seq.iter().enumerate().all(|(i, want)| {
                    cand.resultant_sylvester(&IntPoly::tn_minus_one(i as u64 + 1))
                        .unwrap()
                        .abs()
                        == want.abs()
                })
            })
            .collect()
    }

    #[test]
    fn reconstruct_figure_eight() {
        let seq: Vec<BigInt> =
            [1i64, 5, 16, 45, 121, 320, 841, 2205].iter().map(|&v| big(v)).collect();
        let rep = reconstruct_reciprocal(&seq, 2, 4).unwrap();
        assert_eq!(rep.candidates, vec![p("t^2 - 3t + 1")]);
        assert_eq!(rep.hypothesis_void_at, None);
        assert_eq!(rep.candidates, oracle_reconstruct(&seq, 2, 4));
    }

    #[test]
    fn reconstruct_unknot_all_ones() {
        let seq: Vec<BigInt> = vec![big(1); 8];
        let rep = reconstruct_reciprocal(&seq, 2, 2).unwrap();
        assert!(rep.candidates.contains(&IntPoly::one()));
        assert_eq!(rep.candidates, oracle_reconstruct(&seq, 2, 2));
        assert_eq!(rep.hypothesis_void_at, None);
    }

    #[test]
    fn reconstruct_trefoil_notes_voided_hypothesis() {
        let seq: Vec<BigInt> = [1i64, 3, 4, 3, 1, 0, 1, 3].iter().map(|&v| big(v)).collect();
        let rep = reconstruct_reciprocal(&seq, 2, 2).unwrap();
        assert!(rep.candidates.contains(&p("t^2 - t + 1")));
        assert_eq!(rep.hypothesis_void_at, Some(6));
        assert_eq!(rep.candidates, oracle_reconstruct(&seq, 2, 2));
    }

    #[test]
    fn reconstruct_rejects_empty() {
        assert_eq!(reconstruct_reciprocal(&[], 2, 2), Err(CycError::EmptySequence));
    }

    #[test]
    fn profinite_match_examples() {
        let fig8 = p("t^2 - 3t + 1");
        let rep =
            profinite_ideal_match(&fig8, &fig8, &[1, 2, 3, 4, 6, 12], 0).unwrap();
        assert!(rep.compatible);
        for &(n, ref v) in &rep.candidates {
            assert!(v.contains(&1), "level {n}");
            if n > 2 {
                // the polynomial is reciprocal, so t ↦ t⁻¹ preserves the ideal
                assert!(v.contains(&(n - 1)), "level {n}");
            }
        }

        let rep =
            profinite_ideal_match(&p("t^2 - t + 1"), &fig8, &[1, 2], 0).unwrap();
        assert!(!rep.compatible);
        assert_eq!(rep.witness_empty_level, Some(2));
        assert_eq!(rep.candidates_at(2).unwrap(), &[] as &[u64]);

        let f = p("t^3 - t - 1");
        let rep = profinite_ideal_match(&f, &f, &[1], 0).unwrap();
        assert_eq!(rep.candidates_at(1).unwrap(), &[1]);
        assert!(rep.compatible);

        assert_eq!(
            profinite_ideal_match(&f, &f, &[4], 0),
            Err(CycError::NonDivisorClosedLevels(1))
        );
    }

    #[test]
    fn match_self_with_unit_multiple() {
        let f = p("t^2 - t + 1");
        let g = p("-t^3 + t^2 - t"); // −t·f
        let rep = profinite_ideal_match(&f, &g, &[1, 2, 4], 0).unwrap();
        assert!(rep.compatible);
        for (_, v) in &rep.candidates {
            assert!(v.contains(&1));
        }
    }

    fn arb_nonzero(max_deg: usize, height: i64) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-height..=height, 1..=max_deg + 1)
            .prop_map(|v| IntPoly::from_i64_coeffs(&v))
            .prop_filter("nonzero", |f| !f.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn resultant_sequences_multiply(
            f in arb_nonzero(3, 4),
            g in arb_nonzero(3, 4),
            n in 1u64..=8,
        ) {
            let prod = &f * &g;
            prop_assert_eq!(
                cyclic_resultant(&prod, n).unwrap(),
                cyclic_resultant(&f, n).unwrap() * cyclic_resultant(&g, n).unwrap()
            );
        }

        #[test]
        fn vanishing_iff_divisor(f in arb_nonzero(6, 4), n in 1u64..=12) {
            let r = cyclic_resultant(&f, n).unwrap();
            let has_divisor = f
                .cyclotomic_divisors()
                .unwrap()
                .iter()
                .any(|m| n % m == 0);
            prop_assert_eq!(r.is_zero(), has_divisor);
        }

        #[test]
        fn equal_up_to_unit_is_invariant(f in arb_nonzero(4, 5), k in 0usize..=3, neg in any::<bool>()) {
            let mut g = f.shifted(k);
            if neg {
                g = -&g;
            }
            prop_assert!(equal_up_to_unit(&f, &g).unwrap());
            prop_assert!(equal_up_to_unit(&g, &f).unwrap());
        }

        #[test]
        fn strip_leaves_disjoint_divisors(f in arb_nonzero(4, 3), g in arb_nonzero(4, 3)) {
            let (rf, rg, stripped) = strip_common_cyclotomic(&f, &g).unwrap();
            let df = rf.cyclotomic_divisors().unwrap();
            let dg = rg.cyclotomic_divisors().unwrap();
            prop_assert!(df.iter().all(|m| !dg.contains(m)));
            // restore both inputs from the stripped factors
            let mut back_f = rf.clone();
            let mut back_g = rg.clone();
            for m in &stripped {
                let phi = cyclotomic(*m).unwrap();
                back_f = &back_f * &phi;
                back_g = &back_g * &phi;
            }
            prop_assert_eq!(back_f, f);
            prop_assert_eq!(back_g, g);
        }
    }
}
